#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csest/experiments.hpp"
#include "csest/sampling.hpp"

namespace csest {

enum class Command { estimate, risk_curve, efron, lower_bound, adaptive, vertex_scaling, deviation_tail };

std::string_view to_string(Command c);

struct ExperimentConfig {
  Command command = Command::estimate;
  std::optional<SupportSpec> support;
  std::vector<long long> n_grid;
  int reps = 200;
  std::string estimator = "hull";  // hull | kgon | adaptive
  std::optional<int> r;
  double C = 40.0;
  std::optional<int> r_max;
  double q = 1.0;
  bool normalized = false;
  bool log_correction = false;
  double h = 0.5;
  std::vector<double> x_grid{1.0, 2.0, 4.0, 8.0};
  bool allow_nontheoretical = false;
  std::string points_path;
  std::string output_path;  // artifact file name inside the output directory
  Seed seed;

  EstimatorSpec estimator_spec() const;
  AdaptiveConfig adaptive_config() const;
  // Effective configuration with every default filled in.
  nlohmann::json to_json() const;
};

struct ConfigOverrides {
  std::optional<std::uint64_t> seed_root;
  bool allow_nontheoretical = false;
};

// Throws ParseError for malformed JSON and ValidationError listing every
// invalid field.
ExperimentConfig parse_config(std::string_view text, const ConfigOverrides& overrides = {});

}  // namespace csest
