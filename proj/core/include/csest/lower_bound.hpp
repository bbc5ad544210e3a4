#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csest/geom2d.hpp"

namespace csest {

// Two-point-per-edge hypothesis family for the r/n minimax lower bound on
// polygons with at most r vertices.
//
// The base polygon is the regular (r/2)-gon centered at (1/2, 1/2) with
// circumradius 1/2. For every base edge k an apex sits on the edge's
// perpendicular bisector, outside the base, at distance `delta` from it. The
// member for a bit mask omega is the convex hull of the base and the apexes
// whose bit is set.
struct HypothesisFamily {
  int r;
  double h;
  double delta;
  geom2d::ConvexPolygon base;
  std::vector<geom2d::Point2> apexes;  // apexes[k] faces base edge k

  std::size_t half() const { return apexes.size(); }
  std::uint64_t member_count() const { return std::uint64_t{1} << half(); }
  // Bit k of `omega` selects apexes[k].
  geom2d::ConvexPolygon member(std::uint64_t omega) const;
};

// delta = (h/2) cos(2 pi / r) tan(4 pi / r).
double family_delta(int r, double h);

// Throws InvalidParameters unless r is even, r >= 10, r <= 62 and 0 < h <= 1.
HypothesisFamily build_family(int r, double h);

// Same construction with the apex distance given explicitly (negative controls).
HypothesisFamily build_family_with_apex_distance(int r, double h, double apex_distance);

struct FamilyReport {
  int r = 0;
  double h = 0.0;
  double delta = 0.0;
  double delta_formula = 0.0;
  // Target |P_omega(k,0) △ P_omega(k,1)| = (delta/2) cos(2 pi / r).
  double expected_pair_diff = 0.0;
  double min_pair_diff = 0.0;
  double max_pair_diff = 0.0;
  double max_pair_diff_error = 0.0;
  std::uint64_t pairs_checked = 0;
  double min_affinity = 1.0;
  // sqrt(1 - delta cos(2 pi / r) / 4)
  double affinity_bound = 0.0;
  double base_area = 0.0;
  bool members_in_unit_square = true;
  int max_member_vertices = 0;
  // (r delta cos(2 pi/r) / 8) (1 - delta cos(2 pi/r) / 4)^n
  double lower_bound_value = 0.0;
  long long n = 0;
  // Violated identities, in check order.
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

inline constexpr double kFamilyPairTol = 1e-9;

// Evaluates every identity over all k and all contexts without throwing.
FamilyReport inspect_family(const HypothesisFamily& f, long long n);

// As inspect_family, but throws CheckFailed with the first violated identity.
FamilyReport family_checks(const HypothesisFamily& f, long long n);

// Lower-bound display value for sample size n.
double family_lower_bound(int r, double delta, long long n);

}  // namespace csest
