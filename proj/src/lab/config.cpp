#include "hsum/lab/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "hsum/maximal.hpp"

namespace hsum::lab {

namespace {

// Parameter counts per generator kind.
const std::map<std::string, std::size_t>& corpus_kinds() {
  static const std::map<std::string, std::size_t> kinds{
      {"constant", 1},   {"harmonic", 1},    {"square_wave", 0},          {"spike", 1},
      {"spike_train", 2}, {"sqrt_singular", 1}, {"fat_cantor_indicator", 1}, {"random_trig", 2},
  };
  return kinds;
}

const std::map<std::string, std::size_t>& weight_kinds() {
  static const std::map<std::string, std::size_t> kinds{{"unit", 0}, {"floored_power", 1}, {"shifted_abs", 0}};
  return kinds;
}

void check_specs(const std::vector<GeneratorSpec>& specs, const std::map<std::string, std::size_t>& kinds,
                 const char* what) {
  for (const auto& s : specs) {
    const auto it = kinds.find(s.kind);
    if (it == kinds.end()) throw ConfigError(std::string("unknown ") + what + " generator '" + s.kind + "'");
    if (s.params.size() != it->second) {
      throw ConfigError(std::string(what) + " '" + s.name + "' expects " + std::to_string(it->second) +
                        " parameters");
    }
    if (s.name.empty() || s.name.find_first_of(",\"\n") != std::string::npos) {
      throw ConfigError(std::string(what) + " names must be non-empty and free of commas and quotes");
    }
  }
}

std::vector<GeneratorSpec> specs_from_json(const nlohmann::json& arr) {
  std::vector<GeneratorSpec> out;
  for (const auto& e : arr) {
    GeneratorSpec s;
    s.kind = e.at("kind").get<std::string>();
    s.name = e.value("name", s.kind);
    if (e.contains("params")) s.params = e.at("params").get<std::vector<double>>();
    out.push_back(std::move(s));
  }
  return out;
}

nlohmann::ordered_json specs_to_json(const std::vector<GeneratorSpec>& specs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : specs) {
    nlohmann::ordered_json e;
    e["name"] = s.name;
    e["kind"] = s.kind;
    e["params"] = s.params;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

std::vector<double> LambdaGrid::values(double scale) const {
  if (log_spaced) return hsum::log_spaced(min * scale, max * scale, count);
  std::vector<double> v(count);
  for (std::size_t j = 0; j < count; ++j) {
    v[j] = scale * (min + (max - min) * static_cast<double>(j) / static_cast<double>(count - 1));
  }
  return v;
}

void ExperimentConfig::validate() const {
  if (grid_size < 256 || (grid_size & (grid_size - 1)) != 0) {
    throw ConfigError("grid_size must be a power of two, at least 256");
  }
  if (n_max < 1 || 2 * static_cast<std::size_t>(n_max) + 2 > grid_size) {
    throw ConfigError("n_max must lie in [1, grid_size/2 - 1]");
  }
  if (alphas.empty()) throw ConfigError("alphas must not be empty");
  for (double a : alphas) {
    if (!(a > 0.0 && a <= 2.0)) throw ConfigError("every alpha must lie in (0, 2]");
  }
  if (!(lambda_grid.min > 0.0) || !(lambda_grid.max > lambda_grid.min) || lambda_grid.count < 2) {
    throw ConfigError("lambda_grid needs 0 < min < max and count >= 2");
  }
  if (whitney_depth < 0 || whitney_depth > 60) throw ConfigError("whitney_depth must lie in [0, 60]");
  if (corpus.empty()) throw ConfigError("corpus must not be empty");
  check_specs(corpus, corpus_kinds(), "corpus");
  check_specs(weights, weight_kinds(), "weight");
}

ExperimentConfig default_config() {
  ExperimentConfig cfg;
  cfg.corpus = {
      {"constant", "constant", {1.0}},
      {"cos1", "harmonic", {1.0}},
      {"square", "square_wave", {}},
      {"spike64", "spike", {64.0}},
      {"spike16", "spike", {16.0}},
      {"train4x64", "spike_train", {4.0, 64.0}},
      {"train3x16", "spike_train", {3.0, 16.0}},
      {"cantor3", "fat_cantor_indicator", {3.0}},
      {"cantor5", "fat_cantor_indicator", {5.0}},
      {"sqrt_half", "sqrt_singular", {0.5}},
      {"trig8", "random_trig", {8.0, 0.0}},
      {"trig32", "random_trig", {32.0, 1.0}},
  };
  cfg.weights = {
      {"unit", "unit", {}},
      {"power_half", "floored_power", {-0.5}},
  };
  return cfg;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg = default_config();
  try {
    if (j.contains("grid_size")) cfg.grid_size = j.at("grid_size").get<std::size_t>();
    if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
    if (j.contains("alphas")) cfg.alphas = j.at("alphas").get<std::vector<double>>();
    if (j.contains("lambda_grid")) {
      const auto& l = j.at("lambda_grid");
      cfg.lambda_grid.min = l.value("min", cfg.lambda_grid.min);
      cfg.lambda_grid.max = l.value("max", cfg.lambda_grid.max);
      cfg.lambda_grid.count = l.value("count", cfg.lambda_grid.count);
      cfg.lambda_grid.log_spaced = l.value("log_spaced", cfg.lambda_grid.log_spaced);
    }
    if (j.contains("whitney_depth")) cfg.whitney_depth = j.at("whitney_depth").get<int>();
    if (j.contains("corpus")) cfg.corpus = specs_from_json(j.at("corpus"));
    if (j.contains("weights")) cfg.weights = specs_from_json(j.at("weights"));
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("output_dir")) cfg.output_dir = j.at("output_dir").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["grid_size"] = cfg.grid_size;
  j["n_max"] = cfg.n_max;
  j["alphas"] = cfg.alphas;
  j["lambda_grid"] = {{"min", cfg.lambda_grid.min},
                      {"max", cfg.lambda_grid.max},
                      {"count", cfg.lambda_grid.count},
                      {"log_spaced", cfg.lambda_grid.log_spaced}};
  j["whitney_depth"] = cfg.whitney_depth;
  j["corpus"] = specs_to_json(cfg.corpus);
  j["weights"] = specs_to_json(cfg.weights);
  j["seed"] = cfg.seed;
  j["output_dir"] = cfg.output_dir;
  return j;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse " + path + ": " + e.what());
  }
  return config_from_json(j);
}

std::string config_hash(const ExperimentConfig& cfg) {
  auto j = config_to_json(cfg);
  j.erase("output_dir");
  const std::string text = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hsum::lab
