#pragma once

#include <optional>
#include <span>
#include <vector>

#include "csest/geom2d.hpp"
#include "csest/min_kgon.hpp"

namespace csest {

using kgon::SolveStatus;

struct EstimateResult {
  geom2d::ConvexPolygon polygon;
  std::optional<int> r_requested;
  int r_used;  // vertex count of `polygon`
  double area;
  SolveStatus status;
};

// Smallest constant allowed by the adaptive rule in dimension d: 16d + 16/(d+1).
double adaptive_threshold_constant(int d);

struct AdaptiveConfig {
  double C = 40.0;
  std::optional<int> r_max;  // defaults to the hull vertex count
  bool allow_nontheoretical = false;
  int dimension = 2;

  // Throws InvalidParameters when C <= 16d + 16/(d+1) and the override is off,
  // or when C or r_max are out of range.
  void validate() const;
};

struct PairDiff {
  int r;
  int r_prime;
  double symm_diff;
  double threshold;
};

struct AdaptiveResult {
  int r_hat;
  int R_n;
  bool chose_hull;
  geom2d::ConvexPolygon polygon;
  int hull_vertices;  // V_n
  std::vector<PairDiff> per_r_diffs;
};

// floor(n^((d-1)/(d+1))), computed in exact integer arithmetic.
int adaptive_cutoff(long long n, int d);

EstimateResult hull_estimator(std::span<const geom2d::Point2> points);

// Minimum-area polygon with at most r vertices containing every point.
EstimateResult min_kgon(std::span<const geom2d::Point2> points, int r);

AdaptiveResult adaptive(std::span<const geom2d::Point2> points, const AdaptiveConfig& cfg);

// Number of i such that points[i] falls outside min_kgon(points without i, r).
int loo_outside_count(std::span<const geom2d::Point2> points, int r, int threads = 1);

}  // namespace csest
