#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace hsum::lab {

struct LambdaGrid {
  double min = 0.05;  // multiples of the mean of |f|
  double max = 50.0;
  std::size_t count = 25;
  bool log_spaced = true;

  std::vector<double> values(double scale) const;
};

/// A named generator with its numeric parameters, e.g. spike with {64}.
struct GeneratorSpec {
  std::string name;
  std::string kind;
  std::vector<double> params;
};

struct ExperimentConfig {
  std::size_t grid_size = 1024;
  int n_max = 128;
  std::vector<double> alphas{0.5, 1.0, 2.0};
  LambdaGrid lambda_grid;
  int whitney_depth = 20;
  std::vector<GeneratorSpec> corpus;
  std::vector<GeneratorSpec> weights;
  std::uint64_t seed = 1;
  std::string output_dir = "results";

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The built-in 12-entry corpus and the two standard weights.
ExperimentConfig default_config();

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& path);

/// FNV-1a over the canonical JSON form, as 16 hex digits.
std::string config_hash(const ExperimentConfig& cfg);

}  // namespace hsum::lab
