#include "csest/lower_bound.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "csest/errors.hpp"

namespace csest {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoxTol = 1e-12;

void validate(int r, double h) {
  if (r < 10 || r % 2 != 0 || r > 62) {
    throw InvalidParameters(fmt::format("family: r must be even with 10 <= r <= 62, got {}", r));
  }
  if (!(h > 0.0 && h <= 1.0)) {
    throw InvalidParameters(fmt::format("family: h must lie in (0, 1], got {}", h));
  }
}

}  // namespace

double family_delta(int r, double h) {
  return (h / 2.0) * std::cos(2.0 * kPi / r) * std::tan(4.0 * kPi / r);
}

double family_lower_bound(int r, double delta, long long n) {
  const double dc = delta * std::cos(2.0 * kPi / r);
  return (r * dc / 8.0) * std::pow(1.0 - dc / 4.0, static_cast<double>(n));
}

geom2d::ConvexPolygon HypothesisFamily::member(std::uint64_t omega) const {
  std::vector<geom2d::Point2> pts = base.vertices();
  for (std::size_t k = 0; k < apexes.size(); ++k) {
    if ((omega >> k) & 1U) pts.push_back(apexes[k]);
  }
  return geom2d::convex_hull(pts);
}

HypothesisFamily build_family_with_apex_distance(int r, double h, double apex_distance) {
  validate(r, h);
  const int m = r / 2;
  const geom2d::Point2 c{0.5, 0.5};
  auto base = geom2d::convex_hull(geom2d::regular_polygon(m, 0.5, c).vertices());
  std::vector<geom2d::Point2> apexes;
  apexes.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const auto& a = base[static_cast<std::size_t>(k)];
    const auto& b = base[static_cast<std::size_t>((k + 1) % m)];
    const geom2d::Point2 mid = 0.5 * (a + b);
    const geom2d::Point2 edge = b - a;
    const geom2d::Point2 out = (1.0 / geom2d::norm(edge)) * geom2d::Point2{edge.y, -edge.x};
    apexes.push_back(mid + apex_distance * out);
  }
  return {r, h, family_delta(r, h), std::move(base), std::move(apexes)};
}

HypothesisFamily build_family(int r, double h) {
  return build_family_with_apex_distance(r, h, family_delta(r, h));
}

FamilyReport inspect_family(const HypothesisFamily& f, long long n) {
  FamilyReport rep;
  rep.r = f.r;
  rep.h = f.h;
  rep.delta = f.delta;
  rep.delta_formula = family_delta(f.r, f.h);
  rep.n = n;
  const double cos_r = std::cos(2.0 * kPi / f.r);
  rep.expected_pair_diff = f.delta / 2.0 * cos_r;
  rep.affinity_bound = std::sqrt(1.0 - f.delta * cos_r / 4.0);
  rep.lower_bound_value = family_lower_bound(f.r, f.delta, n);
  rep.base_area = geom2d::area(f.base);

  const std::uint64_t count = f.member_count();
  std::vector<double> areas(count);
  for (std::uint64_t w = 0; w < count; ++w) {
    const auto p = f.member(w);
    areas[w] = geom2d::area(p);
    rep.max_member_vertices = std::max(rep.max_member_vertices, static_cast<int>(p.size()));
    for (const auto& v : p.vertices()) {
      if (v.x < -kBoxTol || v.x > 1.0 + kBoxTol || v.y < -kBoxTol || v.y > 1.0 + kBoxTol) {
        rep.members_in_unit_square = false;
      }
    }
  }

  // The generators of omega(k,0) are a subset of those of omega(k,1), so the
  // members are nested and the symmetric difference is the area gap.
  rep.min_pair_diff = INFINITY;
  rep.max_pair_diff = 0.0;
  rep.max_pair_diff_error = 0.0;
  for (std::size_t k = 0; k < f.half(); ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (std::uint64_t w = 0; w < count; ++w) {
      if (w & bit) continue;
      const double small = areas[w];
      const double large = areas[w | bit];
      const double diff = large - small;
      rep.min_pair_diff = std::min(rep.min_pair_diff, diff);
      rep.max_pair_diff = std::max(rep.max_pair_diff, diff);
      rep.max_pair_diff_error =
          std::max(rep.max_pair_diff_error, std::abs(diff - rep.expected_pair_diff));
      rep.min_affinity = std::min(rep.min_affinity, std::sqrt(small / large));
      ++rep.pairs_checked;
    }
  }

  if (rep.delta != rep.delta_formula) {
    rep.failures.push_back(fmt::format("delta {:.17g} differs from the formula value {:.17g}",
                                       rep.delta, rep.delta_formula));
  }
  if (rep.max_pair_diff_error > kFamilyPairTol) {
    rep.failures.push_back(fmt::format(
        "pairwise distance: |P(k,0) △ P(k,1)| ranges over [{:.12g}, {:.12g}], "
        "expected (delta/2)cos(2pi/r) = {:.12g} (max error {:.3g})",
        rep.min_pair_diff, rep.max_pair_diff, rep.expected_pair_diff, rep.max_pair_diff_error));
  }
  if (rep.min_affinity < rep.affinity_bound - kFamilyPairTol) {
    rep.failures.push_back(fmt::format("affinity bound: min affinity {:.12g} < {:.12g}",
                                       rep.min_affinity, rep.affinity_bound));
  }
  if (rep.base_area < 0.5) {
    rep.failures.push_back(fmt::format("base area {:.12g} < 1/2", rep.base_area));
  }
  if (!rep.members_in_unit_square) {
    rep.failures.push_back("containment: some member leaves [0,1]^2");
  }
  if (rep.max_member_vertices > f.r) {
    rep.failures.push_back(fmt::format("vertex count: a member has {} > r = {} vertices",
                                       rep.max_member_vertices, f.r));
  }
  return rep;
}

FamilyReport family_checks(const HypothesisFamily& f, long long n) {
  auto rep = inspect_family(f, n);
  if (!rep.passed()) {
    throw CheckFailed(fmt::format("family r = {}, h = {}: {}", f.r, f.h, rep.failures.front()));
  }
  return rep;
}

}  // namespace csest
