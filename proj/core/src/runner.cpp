#include "csest/runner.hpp"

#include <fmt/format.h>

#include "csest/errors.hpp"
#include "csest/io.hpp"
#include "csest/lower_bound.hpp"

#ifndef CSEST_VERSION
#define CSEST_VERSION "unknown"
#endif

namespace csest {
namespace {

using io::format_double;

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string seed_cols(const Seed& s) { return fmt::format("{},{}", s.root, s.stream); }

void say(const RunContext& ctx, const std::string& line) {
  if (ctx.log) *ctx.log << line << '\n';
}

std::string run_risk_curve(const ExperimentConfig& cfg, const RunContext& ctx,
                           const RunOptions& opts) {
  const auto curve = risk_curve(*cfg.support, cfg.estimator_spec(), cfg.n_grid, cfg.reps, cfg.q,
                                cfg.normalized, cfg.seed, opts);
  std::string out = "n,estimator,q,normalized,mean_risk,std_err,reps,seed_root,seed_stream\n";
  for (const auto& row : curve.rows) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", row.n, row.estimator, format_double(row.q),
                       row.normalized ? "true" : "false", format_double(row.mean_risk),
                       format_double(row.std_err), row.reps, seed_cols(row.seed));
  }
  if (curve.rows.size() >= 3) {
    const auto fit = rate_fit(curve, cfg.log_correction);
    say(ctx, fmt::format("rate fit: slope {:.4f}, r^2 {:.4f}{}", fit.slope, fit.r_squared,
                         cfg.log_correction ? " (log corrected)" : ""));
  }
  return out;
}

std::string run_efron(const ExperimentConfig& cfg, const RunContext& ctx, const RunOptions& opts) {
  std::string out = "n,reps,lhs,rhs,rel_err,lhs_se,rhs_se,seed_root,seed_stream\n";
  for (long long n : cfg.n_grid) {
    const auto rep = efron_check(*cfg.support, n, cfg.reps, cfg.seed, opts);
    out += fmt::format("{},{},{},{},{},{},{},{}\n", rep.n, rep.reps, format_double(rep.lhs),
                       format_double(rep.rhs), format_double(rep.rel_err),
                       format_double(rep.lhs_se), format_double(rep.rhs_se), seed_cols(cfg.seed));
    say(ctx, fmt::format("n = {}: lhs {:.6g}, rhs {:.6g}, rel_err {:.4f}", n, rep.lhs, rep.rhs,
                         rep.rel_err));
  }
  return out;
}

std::string run_vertex_scaling(const ExperimentConfig& cfg, const RunContext& ctx,
                               const RunOptions& opts) {
  std::string out = "n,mean_vertices,std_err,reps,seed_root,seed_stream\n";
  const auto rows = vertex_counts(*cfg.support, cfg.n_grid, cfg.reps, cfg.seed, opts);
  if (rows.size() >= 3) {
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
      xs.push_back(static_cast<double>(row.n));
      ys.push_back(row.mean_vertices);
    }
    const auto fit = fit_power_law(xs, ys);
    say(ctx, fmt::format("vertex count slope {:.4f}, r^2 {:.4f}", fit.slope, fit.r_squared));
  }
  for (const auto& row : rows) {
    out += fmt::format("{},{},{},{},{}\n", row.n, format_double(row.mean_vertices),
                       format_double(row.std_err), cfg.reps, seed_cols(cfg.seed));
  }
  return out;
}

std::string run_deviation_tail(const ExperimentConfig& cfg, const RunContext& ctx,
                               const RunOptions& opts) {
  std::string out =
      "n,x,tail,bound,mean_symm_diff,std_err,centering,reps,seed_root,seed_stream\n";
  for (long long n : cfg.n_grid) {
    const auto rep = deviation_tail(*cfg.support, n, cfg.reps, cfg.x_grid, cfg.seed, opts);
    for (const auto& row : rep.rows) {
      out += fmt::format("{},{},{},{},{},{},{},{},{}\n", n, format_double(row.x),
                         format_double(row.tail), format_double(row.bound),
                         format_double(rep.mean_symm_diff), format_double(rep.std_err),
                         format_double(rep.centering), rep.reps, seed_cols(cfg.seed));
    }
    say(ctx, fmt::format("n = {}: mean |P^ △ P| {:.6g} vs centering {:.6g}", n,
                         rep.mean_symm_diff, rep.centering));
  }
  return out;
}

std::vector<geom2d::Point2> input_points(const ExperimentConfig& cfg) {
  if (!cfg.points_path.empty()) return io::read_points(cfg.points_path);
  return sample_planar(*cfg.support, static_cast<std::size_t>(cfg.n_grid.front()), cfg.seed);
}

std::string run_estimate(const ExperimentConfig& cfg, const RunContext& ctx) {
  const auto pts = input_points(cfg);
  const auto res = cfg.estimator == "kgon" ? min_kgon(pts, *cfg.r) : hull_estimator(pts);
  say(ctx, fmt::format("{}: {} vertices, area {:.6g}, {}", cfg.estimator, res.r_used, res.area,
                       kgon::to_string(res.status)));
  return dump(io::to_json(res));
}

std::string run_adaptive(const ExperimentConfig& cfg, const RunContext& ctx) {
  const auto pts = input_points(cfg);
  const auto res = adaptive(pts, cfg.adaptive_config());
  say(ctx, fmt::format("r_hat = {}, R_n = {}, V_n = {}, {}", res.r_hat, res.R_n,
                       res.hull_vertices, res.chose_hull ? "hull" : "polygon fit"));
  auto j = io::to_json(res);
  j["n"] = pts.size();
  return dump(j);
}

}  // namespace

RunOutcome run(const ExperimentConfig& cfg, const RunContext& ctx) {
  RunOutcome outcome;
  outcome.artifact = ctx.out_dir / cfg.output_path;
  outcome.metadata = ctx.out_dir / (cfg.output_path + ".meta.json");
  const RunOptions opts{std::max(1, ctx.threads), 100000};
  try {
    std::filesystem::create_directories(ctx.out_dir);
    std::string text;
    std::string failure;
    switch (cfg.command) {
      case Command::estimate:
        text = run_estimate(cfg, ctx);
        break;
      case Command::adaptive:
        text = run_adaptive(cfg, ctx);
        break;
      case Command::risk_curve:
        text = run_risk_curve(cfg, ctx, opts);
        break;
      case Command::efron:
        text = run_efron(cfg, ctx, opts);
        break;
      case Command::vertex_scaling:
        text = run_vertex_scaling(cfg, ctx, opts);
        break;
      case Command::deviation_tail:
        text = run_deviation_tail(cfg, ctx, opts);
        break;
      case Command::lower_bound: {
        const auto fam = build_family(*cfg.r, cfg.h);
        const auto rep = inspect_family(fam, cfg.n_grid.front());
        text = dump(io::to_json(fam, rep));
        say(ctx, fmt::format("delta {:.12g}, lower bound value {:.6g} at n = {}", fam.delta,
                             rep.lower_bound_value, rep.n));
        if (!rep.passed()) failure = fmt::format("family check failed: {}", rep.failures.front());
        break;
      }
    }
    io::write_text(outcome.artifact, text);
    nlohmann::json meta{{"config", cfg.to_json()},
                        {"seed", io::to_json(cfg.seed)},
                        {"artifact", cfg.output_path},
                        {"version", CSEST_VERSION}};
    io::write_text(outcome.metadata, dump(meta));
    if (!failure.empty()) {
      outcome.status = kExitRuntime;
      outcome.message = failure;
    }
  } catch (const Error& e) {
    outcome.status = kExitRuntime;
    outcome.message = e.what();
  } catch (const std::filesystem::filesystem_error& e) {
    outcome.status = kExitRuntime;
    outcome.message = e.what();
  }
  return outcome;
}

}  // namespace csest
