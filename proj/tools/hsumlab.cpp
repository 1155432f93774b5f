#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsum/interval_set.hpp"
#include "hsum/lab/config.hpp"
#include "hsum/lab/plotdata.hpp"
#include "hsum/lab/suites.hpp"
#include "hsum/whitney.hpp"

namespace {

constexpr int kUsage = 2;

hsum::OpenIntervalSet parse_components(const std::string& text) {
  std::vector<std::pair<hsum::Rational, hsum::Rational>> pairs;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, ';')) {
    const auto comma = part.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("component '" + part + "' is not 'a,b'");
    try {
      pairs.emplace_back(hsum::parse_rational(part.substr(0, comma)), hsum::parse_rational(part.substr(comma + 1)));
    } catch (const hsum::DomainError& e) {
      throw std::invalid_argument(e.what());
    }
  }
  if (pairs.empty()) throw std::invalid_argument("no components given");
  try {
    return hsum::OpenIntervalSet::from_pairs(pairs);
  } catch (const hsum::DomainError& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsumlab: strong summability laboratory"};
  app.require_subcommand(1);

  std::string config_path, suite = "all", out_dir;
  long long seed = -1;
  auto* run = app.add_subcommand("run", "run verification suites and write reports");
  run->add_option("--config", config_path, "experiment config (JSON); built-in defaults when omitted");
  run->add_option("--suite", suite, "whitney, maximal, marcinkiewicz, kernels, strongsum, weaktype or all");
  run->add_option("--out", out_dir, "output directory (overrides the config)");
  run->add_option("--seed", seed, "seed for randomized corpus members (overrides the config)");

  std::string components;
  int depth = 8;
  auto* cover = app.add_subcommand("cover", "print the Whitney cover of an open set as JSON lines");
  cover->add_option("--g", components, "components as 'a,b;c,d' with rational endpoints")->required();
  cover->add_option("--depth", depth, "truncation depth");

  std::string results;
  auto* plot = app.add_subcommand("plotdata", "print plot-ready long CSV from a results directory");
  plot->add_option("results", results, "results directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*run) {
      if (!hsum::lab::is_suite(suite)) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kUsage;
      }
      hsum::lab::ExperimentConfig cfg =
          config_path.empty() ? hsum::lab::default_config() : hsum::lab::load_config(config_path);
      if (!out_dir.empty()) cfg.output_dir = out_dir;
      if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
      cfg.validate();
      const auto result = hsum::lab::run_suite(cfg, suite, std::cout);
      if (result.exit_code != 0) {
        std::cerr << "invariant failures:\n";
        for (const auto& s : result.summaries) {
          for (const auto& f : s.failures()) std::cerr << "  " << s.suite() << ": " << f << '\n';
        }
      }
      return result.exit_code;
    }
    if (*cover) {
      if (depth < 0) throw std::invalid_argument("depth must be non-negative");
      const auto g = parse_components(components);
      hsum::write_cover_jsonl(std::cout, hsum::whitney_refine(g, depth));
      return 0;
    }
    if (*plot) {
      hsum::lab::emit_plot_data(results, std::cout);
      return 0;
    }
  } catch (const hsum::lab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
