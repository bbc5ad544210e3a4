#include "csest/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "csest/errors.hpp"
#include "csest/hull_nd.hpp"
#include "csest/parallel.hpp"

namespace csest {
namespace {

struct MeanSe {
  double mean;
  double se;
};

MeanSe mean_se(const std::vector<double>& v) {
  const double n = static_cast<double>(v.size());
  const double mean = pairwise_sum(v) / n;
  std::vector<double> sq(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) sq[i] = (v[i] - mean) * (v[i] - mean);
  const double var = v.size() > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

void require_planar(const SupportSpec& spec, const char* what) {
  if (spec.dimension() != 2) {
    throw UnsupportedDimension(
        fmt::format("{} needs a planar support, got dimension {}", what, spec.dimension()));
  }
}

// |G \ hull| by Monte Carlo for d >= 3; the hull lies inside G.
double missing_volume_mc(const SupportSpec& spec, const PointCloud& pts, std::size_t probes,
                         Seed seed) {
  const hull::ConvexHullND h(pts.coords, pts.dim);
  const auto probe = sample_support(spec, probes, seed);
  std::size_t outside = 0;
  for (std::size_t i = 0; i < probe.size(); ++i) {
    if (!h.contains(probe.row(i))) ++outside;
  }
  return support_area(spec) * static_cast<double>(outside) / static_cast<double>(probes);
}

}  // namespace

std::string EstimatorSpec::label() const {
  switch (kind) {
    case Kind::hull:
      return "hull";
    case Kind::kgon:
      return fmt::format("kgon({})", r);
    case Kind::adaptive:
      return fmt::format("adaptive(C={})", adaptive_cfg.C);
  }
  return "unknown";
}

geom2d::ConvexPolygon fit_estimator(const EstimatorSpec& est,
                                    std::span<const geom2d::Point2> pts) {
  switch (est.kind) {
    case EstimatorSpec::Kind::hull:
      return geom2d::convex_hull(pts);
    case EstimatorSpec::Kind::kgon:
      return min_kgon(pts, est.r).polygon;
    case EstimatorSpec::Kind::adaptive:
      return adaptive(pts, est.adaptive_cfg).polygon;
  }
  throw InvalidParameters("unknown estimator kind");
}

double support_symm_diff(const SupportSpec& spec, const geom2d::ConvexPolygon& p) {
  if (auto g = spec.as_polygon()) return geom2d::symm_diff_area(*g, p);
  if (auto d = spec.as_disk()) {
    const double disk = std::numbers::pi * d->radius * d->radius;
    const double inter = geom2d::disk_intersection_area(p, d->center, d->radius);
    return std::max(0.0, disk + geom2d::area(p) - 2.0 * inter);
  }
  throw UnsupportedDimension("exact symmetric difference needs a planar support");
}

RiskRow risk_mc(const SupportSpec& spec, const EstimatorSpec& est, long long n, int reps,
                double q, bool normalized, Seed seed, const RunOptions& opts) {
  if (n < 3) throw InvalidParameters(fmt::format("risk_mc: n must be at least 3, got {}", n));
  if (reps < 2) throw InvalidParameters(fmt::format("risk_mc: reps must be at least 2, got {}", reps));
  if (!(q >= 1.0 && std::isfinite(q))) {
    throw InvalidParameters(fmt::format("risk_mc: q must be a finite number >= 1, got {}", q));
  }
  const int d = spec.dimension();
  if (d != 2 && est.kind != EstimatorSpec::Kind::hull) {
    throw UnsupportedDimension(
        fmt::format("{} is only available for planar supports, got dimension {}", est.label(), d));
  }
  if (est.kind == EstimatorSpec::Kind::adaptive) est.adaptive_cfg.validate();
  const double g_area = support_area(spec);
  std::vector<double> values(static_cast<std::size_t>(reps));
  parallel_for(values.size(), opts.threads, [&](std::size_t i) {
    const Seed s = seed.child(i).child(static_cast<std::uint64_t>(n));
    double diff;
    if (d == 2) {
      const auto pts = sample_planar(spec, static_cast<std::size_t>(n), s);
      diff = support_symm_diff(spec, fit_estimator(est, pts));
    } else {
      const auto pts = sample_support(spec, static_cast<std::size_t>(n), s);
      diff = missing_volume_mc(spec, pts, opts.mc_probes, s.child(1));
    }
    if (normalized) diff /= g_area;
    values[i] = std::pow(diff, q);
  });
  const auto ms = mean_se(values);
  return {n, est.label(), q, normalized, ms.mean, ms.se, reps, seed};
}

RiskCurve risk_curve(const SupportSpec& spec, const EstimatorSpec& est,
                     std::vector<long long> n_grid, int reps, double q, bool normalized,
                     Seed seed, const RunOptions& opts) {
  std::sort(n_grid.begin(), n_grid.end());
  RiskCurve curve;
  for (long long n : n_grid) {
    curve.rows.push_back(risk_mc(spec, est, n, reps, q, normalized, seed, opts));
  }
  return curve;
}

RateFit fit_power_law(std::span<const double> xs, std::span<const double> ys,
                      bool log_correction) {
  if (xs.size() != ys.size()) throw InvalidParameters("fit: x and y lengths differ");
  if (xs.size() < 3) {
    throw InsufficientData(fmt::format("fit needs at least 3 rows, got {}", xs.size()));
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 1.0) || !(ys[i] > 0.0)) {
      throw InsufficientData(
          fmt::format("fit needs x > 1 and y > 0, row {} has ({}, {})", i, xs[i], ys[i]));
    }
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]) - (log_correction ? std::log(std::log(xs[i])) : 0.0));
  }
  auto sorted = std::vector<double>(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InsufficientData("fit needs distinct x values");
  }
  const double m = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  const double slope = sxy / sxx;
  const double r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return {slope, my - slope * mx, r2, log_correction};
}

RateFit rate_fit(const RiskCurve& curve, bool log_correction) {
  std::vector<double> xs, ys;
  for (const auto& row : curve.rows) {
    xs.push_back(static_cast<double>(row.n));
    ys.push_back(row.mean_risk);
  }
  return fit_power_law(xs, ys, log_correction);
}

EfronReport efron_check(const SupportSpec& spec, long long n, int reps, Seed seed,
                        const RunOptions& opts) {
  require_planar(spec, "efron_check");
  if (n < 3) throw InvalidParameters(fmt::format("efron_check: n must be at least 3, got {}", n));
  if (reps < 2) throw InvalidParameters("efron_check: reps must be at least 2");
  const double g_area = support_area(spec);
  std::vector<double> missing(static_cast<std::size_t>(reps));
  std::vector<double> verts(static_cast<std::size_t>(reps));
  parallel_for(missing.size(), opts.threads, [&](std::size_t i) {
    const auto a = sample_planar(spec, static_cast<std::size_t>(n), seed.child(2 * i));
    missing[i] = g_area - geom2d::area(geom2d::convex_hull(a));
    const auto b = sample_planar(spec, static_cast<std::size_t>(n + 1), seed.child(2 * i + 1));
    verts[i] = static_cast<double>(geom2d::hull_vertex_count(b));
  });
  const auto l = mean_se(missing);
  const auto v = mean_se(verts);
  const double scale = g_area / static_cast<double>(n + 1);
  const double rhs = scale * v.mean;
  return {n, reps, l.mean, rhs, std::abs(l.mean - rhs) / rhs, l.se, scale * v.se};
}

double hellinger_affinity(const SupportSpec& a, const SupportSpec& b) {
  const double va = support_area(a);
  const double vb = support_area(b);
  if (a.dimension() == 2 && b.dimension() == 2) {
    const auto pa = a.as_polygon(), pb = b.as_polygon();
    const auto da = a.as_disk(), db = b.as_disk();
    double inter;
    if (pa && pb) {
      inter = geom2d::intersection_area(*pa, *pb);
    } else if (pa && db) {
      inter = geom2d::disk_intersection_area(*pa, db->center, db->radius);
    } else if (da && pb) {
      inter = geom2d::disk_intersection_area(*pb, da->center, da->radius);
    } else {
      inter = geom2d::disk_disk_intersection_area(da->center, da->radius, db->center, db->radius);
    }
    return std::clamp(inter / std::sqrt(va * vb), 0.0, 1.0);
  }
  const auto* ba = std::get_if<BallSupport>(&a.variant());
  const auto* bb = std::get_if<BallSupport>(&b.variant());
  const auto* ca = std::get_if<CubeSupport>(&a.variant());
  const auto* cb = std::get_if<CubeSupport>(&b.variant());
  const bool nested = (ba && bb && ba->dimension == bb->dimension) ||
                      (ca && cb && ca->dimension == cb->dimension);
  if (!nested) {
    throw UnsupportedCombination(
        "affinity needs two planar supports or two nested balls or cubes of equal dimension");
  }
  return std::min(va, vb) / std::sqrt(va * vb);
}

std::vector<VertexRow> vertex_counts(const SupportSpec& spec, std::vector<long long> n_grid,
                                     int reps, Seed seed, const RunOptions& opts) {
  if (reps < 2) throw InvalidParameters("vertex counts: reps must be at least 2");
  std::sort(n_grid.begin(), n_grid.end());
  const int d = spec.dimension();
  std::vector<VertexRow> rows;
  for (long long n : n_grid) {
    if (n < d + 1) throw InvalidParameters(fmt::format("vertex counts: n = {} is below d + 1", n));
    std::vector<double> counts(static_cast<std::size_t>(reps));
    parallel_for(counts.size(), opts.threads, [&](std::size_t i) {
      const Seed s = seed.child(i).child(static_cast<std::uint64_t>(n));
      const auto pts = sample_support(spec, static_cast<std::size_t>(n), s);
      if (d == 2) {
        counts[i] = static_cast<double>(geom2d::hull_vertex_count(pts.planar()));
      } else {
        counts[i] = static_cast<double>(hull::ConvexHullND(pts.coords, d).vertex_count());
      }
    });
    const auto ms = mean_se(counts);
    rows.push_back({n, ms.mean, ms.se});
  }
  return rows;
}

VertexScaling vertex_count_scaling(const SupportSpec& spec, std::vector<long long> n_grid,
                                   int reps, Seed seed, const RunOptions& opts) {
  VertexScaling out{vertex_counts(spec, std::move(n_grid), reps, seed, opts), {}};
  std::vector<double> xs, ys;
  for (const auto& row : out.rows) {
    xs.push_back(static_cast<double>(row.n));
    ys.push_back(row.mean_vertices);
  }
  out.fit = fit_power_law(xs, ys, false);
  return out;
}

DeviationReport deviation_tail(const SupportSpec& spec, long long n, int reps,
                               std::vector<double> x_grid, Seed seed, const RunOptions& opts) {
  const auto poly = spec.as_polygon();
  if (!poly) throw InvalidParameters("deviation_tail needs a polygon support");
  if (reps < 1000) {
    throw InvalidParameters(fmt::format("deviation_tail: reps must be at least 1000, got {}", reps));
  }
  if (n < 3) throw InvalidParameters("deviation_tail: n must be at least 3");
  for (double x : x_grid) {
    if (!(x > 0.0)) throw InvalidParameters(fmt::format("deviation_tail: x must be > 0, got {}", x));
  }
  const int r = static_cast<int>(poly->size());
  const double nd = static_cast<double>(n);
  const double centering = 4.0 * 2.0 * r * std::log(nd) / nd;
  const auto est = EstimatorSpec::kgon(r);
  std::vector<double> diffs(static_cast<std::size_t>(reps));
  parallel_for(diffs.size(), opts.threads, [&](std::size_t i) {
    const Seed s = seed.child(i).child(static_cast<std::uint64_t>(n));
    const auto pts = sample_planar(spec, static_cast<std::size_t>(n), s);
    diffs[i] = geom2d::symm_diff_area(*poly, fit_estimator(est, pts));
  });
  const auto ms = mean_se(diffs);
  DeviationReport rep{n, reps, r, centering, ms.mean, ms.se, {}};
  for (double x : x_grid) {
    std::size_t hits = 0;
    for (double dlt : diffs) {
      if (nd * (dlt - centering) >= x) ++hits;
    }
    rep.rows.push_back({x, static_cast<double>(hits) / reps, std::exp(-x / 2.0)});
  }
  return rep;
}

}  // namespace csest
