#include "csest/config.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <set>

#include "csest/errors.hpp"
#include "csest/io.hpp"

namespace csest {
namespace {

constexpr std::array<std::pair<Command, std::string_view>, 7> kCommands{{
    {Command::estimate, "estimate"},
    {Command::risk_curve, "risk-curve"},
    {Command::efron, "efron"},
    {Command::lower_bound, "lower-bound"},
    {Command::adaptive, "adaptive"},
    {Command::vertex_scaling, "vertex-scaling"},
    {Command::deviation_tail, "deviation-tail"},
}};

const std::set<std::string> kKnownKeys{
    "command", "support", "n", "n_grid", "reps", "estimator", "r", "C", "r_max", "q",
    "normalized", "log_correction", "h", "x_grid", "allow_nontheoretical", "points", "output",
    "seed"};

std::string default_output(Command c) {
  switch (c) {
    case Command::estimate:
      return "estimate.json";
    case Command::adaptive:
      return "adaptive.json";
    case Command::lower_bound:
      return "lower_bound.json";
    case Command::risk_curve:
      return "risk_curve.csv";
    case Command::efron:
      return "efron.csv";
    case Command::vertex_scaling:
      return "vertex_scaling.csv";
    case Command::deviation_tail:
      return "deviation_tail.csv";
  }
  return "out";
}

class Reader {
 public:
  explicit Reader(const nlohmann::json& j) : j_(j) {}

  std::vector<std::string> errors;

  bool has(const char* key) const { return j_.contains(key); }

  template <class T>
  void integer(const char* key, T& out) {
    if (!has(key)) return;
    const auto& v = j_[key];
    if (!v.is_number_integer()) {
      errors.push_back(fmt::format("{}: expected an integer", key));
      return;
    }
    out = v.get<T>();
  }

  void number(const char* key, double& out) {
    if (!has(key)) return;
    const auto& v = j_[key];
    if (!v.is_number()) {
      errors.push_back(fmt::format("{}: expected a number", key));
      return;
    }
    out = v.get<double>();
  }

  void boolean(const char* key, bool& out) {
    if (!has(key)) return;
    const auto& v = j_[key];
    if (!v.is_boolean()) {
      errors.push_back(fmt::format("{}: expected true or false", key));
      return;
    }
    out = v.get<bool>();
  }

  void string(const char* key, std::string& out) {
    if (!has(key)) return;
    const auto& v = j_[key];
    if (!v.is_string()) {
      errors.push_back(fmt::format("{}: expected a string", key));
      return;
    }
    out = v.get<std::string>();
  }

  template <class T>
  void list(const char* key, std::vector<T>& out) {
    if (!has(key)) return;
    const auto& v = j_[key];
    if (!v.is_array() || v.empty()) {
      errors.push_back(fmt::format("{}: expected a nonempty array", key));
      return;
    }
    std::vector<T> vals;
    for (const auto& e : v) {
      const bool ok = std::is_integral_v<T> ? e.is_number_integer() : e.is_number();
      if (!ok) {
        errors.push_back(fmt::format("{}: expected an array of numbers", key));
        return;
      }
      vals.push_back(e.get<T>());
    }
    out = std::move(vals);
  }

 private:
  const nlohmann::json& j_;
};

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

EstimatorSpec ExperimentConfig::estimator_spec() const {
  if (estimator == "kgon") return EstimatorSpec::kgon(r.value_or(4));
  if (estimator == "adaptive") return EstimatorSpec::adaptive(adaptive_config());
  return EstimatorSpec::hull();
}

AdaptiveConfig ExperimentConfig::adaptive_config() const {
  AdaptiveConfig cfg;
  cfg.C = C;
  cfg.r_max = r_max;
  cfg.allow_nontheoretical = allow_nontheoretical;
  cfg.dimension = 2;
  return cfg;
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["command"] = std::string(to_string(command));
  j["support"] = support ? io::to_json(*support) : nlohmann::json();
  j["n_grid"] = n_grid;
  j["reps"] = reps;
  j["estimator"] = estimator;
  j["r"] = r ? nlohmann::json(*r) : nlohmann::json();
  j["C"] = C;
  j["r_max"] = r_max ? nlohmann::json(*r_max) : nlohmann::json();
  j["q"] = q;
  j["normalized"] = normalized;
  j["log_correction"] = log_correction;
  j["h"] = h;
  j["x_grid"] = x_grid;
  j["allow_nontheoretical"] = allow_nontheoretical;
  j["points"] = points_path;
  j["output"] = output_path;
  j["seed"] = io::to_json(seed);
  return j;
}

ExperimentConfig parse_config(std::string_view text, const ConfigOverrides& overrides) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");

  ExperimentConfig cfg;
  Reader rd(j);
  auto& errors = rd.errors;

  for (const auto& [key, _] : j.items()) {
    if (!kKnownKeys.contains(key)) errors.push_back(fmt::format("{}: unknown field", key));
  }

  std::string command;
  rd.string("command", command);
  if (!rd.has("command")) errors.push_back("command: required");
  bool command_ok = false;
  for (const auto& [cmd, name] : kCommands) {
    if (name == command) {
      cfg.command = cmd;
      command_ok = true;
    }
  }
  if (rd.has("command") && !command_ok) {
    errors.push_back(fmt::format("command: unknown command '{}'", command));
  }

  if (rd.has("support")) {
    try {
      cfg.support = io::support_from_json(j["support"]);
    } catch (const ValidationError& e) {
      errors.push_back(e.what());
    }
  }

  if (rd.has("n") && rd.has("n_grid")) errors.push_back("n, n_grid: give only one of them");
  if (rd.has("n")) {
    long long n = 0;
    rd.integer("n", n);
    cfg.n_grid = {n};
  }
  rd.list("n_grid", cfg.n_grid);
  rd.integer("reps", cfg.reps);
  rd.string("estimator", cfg.estimator);
  if (rd.has("r")) {
    int r = 0;
    rd.integer("r", r);
    cfg.r = r;
  }
  rd.number("C", cfg.C);
  if (rd.has("r_max")) {
    int r = 0;
    rd.integer("r_max", r);
    cfg.r_max = r;
  }
  rd.number("q", cfg.q);
  rd.boolean("normalized", cfg.normalized);
  rd.boolean("log_correction", cfg.log_correction);
  rd.number("h", cfg.h);
  rd.list("x_grid", cfg.x_grid);
  rd.boolean("allow_nontheoretical", cfg.allow_nontheoretical);
  rd.string("points", cfg.points_path);
  rd.string("output", cfg.output_path);
  if (rd.has("seed")) {
    const auto& s = j["seed"];
    if (s.is_number_unsigned()) {
      cfg.seed = {s.get<std::uint64_t>(), 0};
    } else if (s.is_object() && s.contains("root") && s["root"].is_number_unsigned() &&
               (!s.contains("stream") || s["stream"].is_number_unsigned())) {
      cfg.seed = {s["root"].get<std::uint64_t>(),
                  s.contains("stream") ? s["stream"].get<std::uint64_t>() : 0};
    } else {
      errors.push_back("seed: expected a non-negative integer or {\"root\", \"stream\"}");
    }
  }

  if (overrides.seed_root) cfg.seed.root = *overrides.seed_root;
  if (overrides.allow_nontheoretical) cfg.allow_nontheoretical = true;
  if (cfg.output_path.empty()) cfg.output_path = default_output(cfg.command);
  if (cfg.output_path.find('/') != std::string::npos || cfg.output_path == "." ||
      cfg.output_path == "..") {
    errors.push_back("output: must be a plain file name");
  }

  if (!command_ok) {
    if (!errors.empty()) throw ValidationError(fmt::format("invalid config: {}", fmt::join(errors, "; ")));
    throw ValidationError("invalid config: command missing");
  }

  const Command c = cfg.command;
  const bool needs_support = c == Command::risk_curve || c == Command::efron ||
                             c == Command::vertex_scaling || c == Command::deviation_tail ||
                             (c == Command::adaptive && cfg.points_path.empty());
  const bool needs_n = needs_support;
  if (needs_support && !cfg.support) errors.push_back("support: required for this command");
  if (c == Command::lower_bound && cfg.n_grid.empty()) cfg.n_grid = {1000};
  if (needs_n && cfg.n_grid.empty()) errors.push_back("n_grid: required for this command");
  for (std::size_t i = 0; i < cfg.n_grid.size(); ++i) {
    if (cfg.n_grid[i] < 4) {
      errors.push_back(fmt::format("n_grid: every n must be at least 4, got {}", cfg.n_grid[i]));
      break;
    }
    if (i > 0 && cfg.n_grid[i] <= cfg.n_grid[i - 1]) {
      errors.push_back("n_grid: must be strictly increasing");
      break;
    }
  }
  if ((c == Command::adaptive || c == Command::lower_bound) && cfg.n_grid.size() > 1) {
    errors.push_back("n: this command takes a single sample size");
  }
  if ((c == Command::estimate || c == Command::adaptive) && cfg.support && !cfg.points_path.empty()) {
    errors.push_back("points, support: give only one of them");
  }
  if (c == Command::estimate && cfg.points_path.empty()) errors.push_back("points: required for estimate");

  if (c == Command::estimate && !rd.has("estimator") && cfg.r) cfg.estimator = "kgon";
  if (c == Command::adaptive) cfg.estimator = "adaptive";
  if (cfg.estimator != "hull" && cfg.estimator != "kgon" && cfg.estimator != "adaptive") {
    errors.push_back(fmt::format("estimator: expected hull, kgon or adaptive, got '{}'", cfg.estimator));
  }
  if (c == Command::estimate && cfg.estimator == "adaptive") {
    errors.push_back("estimator: use the adaptive command for the adaptive estimator");
  }
  if (cfg.estimator == "kgon" && !cfg.r) errors.push_back("r: required for the kgon estimator");
  if (c == Command::deviation_tail) {
    if (cfg.support && !cfg.support->as_polygon()) {
      errors.push_back("support: deviation-tail needs a polygon support");
    }
    if (cfg.reps < 1000) errors.push_back(fmt::format("reps: deviation-tail needs at least 1000, got {}", cfg.reps));
    for (double x : cfg.x_grid) {
      if (!(x > 0.0)) {
        errors.push_back(fmt::format("x_grid: every x must be > 0, got {}", x));
        break;
      }
    }
  }
  if (cfg.reps < 2) errors.push_back(fmt::format("reps: must be at least 2, got {}", cfg.reps));
  if (!(cfg.q >= 1.0)) errors.push_back(fmt::format("q: must be at least 1, got {}", cfg.q));

  const bool planar_only = cfg.estimator != "hull" || c == Command::efron || c == Command::adaptive;
  if (cfg.support && cfg.support->dimension() != 2 && planar_only) {
    errors.push_back(fmt::format("support: {} with estimator {} needs a planar support",
                                 to_string(c), cfg.estimator));
  }

  if (c == Command::lower_bound) {
    if (!cfg.r) {
      errors.push_back("r: required for lower-bound");
    } else if (*cfg.r < 10 || *cfg.r % 2 != 0) {
      errors.push_back(fmt::format("r: lower-bound needs an even r >= 10, got {}", *cfg.r));
    } else if (*cfg.r > 62) {
      errors.push_back(fmt::format("r: lower-bound supports r <= 62, got {}", *cfg.r));
    }
    if (!(cfg.h > 0.0 && cfg.h <= 1.0)) errors.push_back(fmt::format("h: must lie in (0, 1], got {}", cfg.h));
  } else if (cfg.r && *cfg.r < 3) {
    errors.push_back(fmt::format("r: must be at least 3, got {}", *cfg.r));
  }

  if (cfg.estimator == "adaptive") {
    const double floor_c = adaptive_threshold_constant(2);
    if (!(cfg.C > 0.0)) {
      errors.push_back(fmt::format("C: must be positive, got {}", cfg.C));
    } else if (!cfg.allow_nontheoretical && !(cfg.C > floor_c)) {
      errors.push_back(fmt::format(
          "C: {} is not above the threshold 16d + 16/(d+1) = {:.6f} for d = 2; "
          "pass --allow-nontheoretical to run below it",
          cfg.C, floor_c));
    }
    if (cfg.r_max && *cfg.r_max < 3) errors.push_back("r_max: must be at least 3");
  }

  if (!errors.empty()) {
    throw ValidationError(fmt::format("invalid config: {}", fmt::join(errors, "; ")));
  }
  return cfg;
}

}  // namespace csest
