#include "csest/estimators.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <fmt/format.h>

#include "csest/errors.hpp"
#include "csest/parallel.hpp"

namespace csest {

double adaptive_threshold_constant(int d) { return 16.0 * d + 16.0 / (d + 1.0); }

void AdaptiveConfig::validate() const {
  if (dimension < 2) throw InvalidParameters("adaptive: dimension must be at least 2");
  if (!(std::isfinite(C) && C > 0.0)) throw InvalidParameters("adaptive: C must be positive");
  const double floor_c = adaptive_threshold_constant(dimension);
  if (!allow_nontheoretical && !(C > floor_c)) {
    throw InvalidParameters(fmt::format(
        "adaptive: C = {} must exceed 16d + 16/(d+1) = {:.6f} for d = {} "
        "(pass allow_nontheoretical to override)",
        C, floor_c, dimension));
  }
  if (r_max && *r_max < 3) throw InvalidParameters("adaptive: r_max must be at least 3");
}

int adaptive_cutoff(long long n, int d) {
  using boost::multiprecision::cpp_int;
  if (n < 1 || d < 2) throw InvalidParameters("adaptive_cutoff needs n >= 1 and d >= 2");
  const unsigned p = static_cast<unsigned>(d - 1);
  const unsigned q = static_cast<unsigned>(d + 1);
  const cpp_int target = boost::multiprecision::pow(cpp_int(n), p);
  auto m = static_cast<long long>(std::floor(std::pow(static_cast<long double>(n),
                                                      static_cast<long double>(p) / q)));
  m = std::max(0LL, m);
  while (m > 0 && boost::multiprecision::pow(cpp_int(m), q) > target) --m;
  while (boost::multiprecision::pow(cpp_int(m + 1), q) <= target) ++m;
  return static_cast<int>(m);
}

EstimateResult hull_estimator(std::span<const geom2d::Point2> points) {
  auto hull = geom2d::convex_hull(points);
  const int r = static_cast<int>(hull.size());
  const double a = geom2d::area(hull);
  return {std::move(hull), std::nullopt, r, a, SolveStatus::exact_hull};
}

EstimateResult min_kgon(std::span<const geom2d::Point2> points, int r) {
  if (r < 3) throw InvalidParameters(fmt::format("min_kgon: r must be at least 3, got {}", r));
  const auto hull = geom2d::convex_hull(points);
  auto sol = kgon::EnclosingPolygonSolver(hull).solve(r);
  const int used = static_cast<int>(sol.polygon.size());
  return {std::move(sol.polygon), r, used, sol.area, sol.status};
}

AdaptiveResult adaptive(std::span<const geom2d::Point2> points, const AdaptiveConfig& cfg) {
  cfg.validate();
  if (points.size() < 4) {
    throw DegenerateInput(fmt::format("adaptive estimator needs n >= 4 points, got {}",
                                      points.size()));
  }
  const auto hull = geom2d::convex_hull(points);
  const int v_n = static_cast<int>(hull.size());
  const int r_top = std::max(3, std::min(v_n, cfg.r_max.value_or(v_n)));

  const auto solutions = kgon::EnclosingPolygonSolver(hull).solve_upto(r_top);
  auto fit = [&](int r) -> const geom2d::ConvexPolygon& {
    return solutions[static_cast<std::size_t>(r - 3)].polygon;
  };

  const double n = static_cast<double>(points.size());
  const double scale = cfg.C * std::log(n) / n;
  AdaptiveResult out{r_top, adaptive_cutoff(static_cast<long long>(points.size()), cfg.dimension),
                     false, hull, v_n, {}};
  for (int r = 3; r <= r_top; ++r) {
    bool accepted = true;
    for (int rp = r; rp <= r_top; ++rp) {
      const double diff = rp == r ? 0.0 : geom2d::symm_diff_area(fit(r), fit(rp));
      const double threshold = scale * rp;
      out.per_r_diffs.push_back({r, rp, diff, threshold});
      if (diff > threshold) {
        accepted = false;
        break;
      }
    }
    if (accepted) {
      out.r_hat = r;
      break;
    }
  }
  out.chose_hull = out.r_hat > out.R_n;
  out.polygon = out.chose_hull ? hull : fit(out.r_hat);
  return out;
}

int loo_outside_count(std::span<const geom2d::Point2> points, int r, int threads) {
  if (points.size() < 5) {
    throw DegenerateInput(fmt::format("leave-one-out count needs at least 5 points, got {}",
                                      points.size()));
  }
  if (r < 3) throw InvalidParameters("leave-one-out count needs r >= 3");
  // Points strictly inside the full hull leave the hull, and hence the fit,
  // unchanged when removed; only hull vertices need their own subproblem.
  const auto hull = geom2d::convex_hull(points);
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (std::find(hull.vertices().begin(), hull.vertices().end(), p) != hull.vertices().end()) {
      candidates.push_back(i);
    }
  }
  std::vector<int> outside(candidates.size(), 0);
  parallel_for(candidates.size(), threads, [&](std::size_t c) {
    const std::size_t i = candidates[c];
    std::vector<geom2d::Point2> rest;
    rest.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) rest.push_back(points[j]);
    }
    const auto fit = min_kgon(rest, r);
    outside[c] = geom2d::contains(fit.polygon, points[i], geom2d::kContainTol) ? 0 : 1;
  });
  int total = 0;
  for (int o : outside) total += o;
  return total;
}

}  // namespace csest
