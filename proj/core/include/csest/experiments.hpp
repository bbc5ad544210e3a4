#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csest/estimators.hpp"
#include "csest/rng.hpp"
#include "csest/sampling.hpp"

namespace csest {

struct EstimatorSpec {
  enum class Kind { hull, kgon, adaptive };
  Kind kind = Kind::hull;
  int r = 4;  // kgon only
  AdaptiveConfig adaptive_cfg;

  static EstimatorSpec hull() { return {}; }
  static EstimatorSpec kgon(int r) { return {Kind::kgon, r, {}}; }
  static EstimatorSpec adaptive(AdaptiveConfig cfg) { return {Kind::adaptive, 4, cfg}; }

  // "hull", "kgon(4)", "adaptive(C=40)".
  std::string label() const;
};

struct RunOptions {
  int threads = 1;
  std::size_t mc_probes = 100000;  // d >= 3 volume probes per replicate
};

struct RiskRow {
  long long n;
  std::string estimator;
  double q;
  bool normalized;
  double mean_risk;
  double std_err;
  int reps;
  Seed seed;
};

struct RiskCurve {
  std::vector<RiskRow> rows;
};

struct RateFit {
  double slope;
  double intercept;
  double r_squared;
  bool log_correction;
};

// Polygon fit of one sample by the given estimator (planar samples only).
geom2d::ConvexPolygon fit_estimator(const EstimatorSpec& est, std::span<const geom2d::Point2> pts);

// |G △ P| for a planar support, exact.
double support_symm_diff(const SupportSpec& spec, const geom2d::ConvexPolygon& p);

// Mean of |G △ Ĝ_n|^q over `reps` replicates. Replicate i uses
// seed.child(i).child(n).
RiskRow risk_mc(const SupportSpec& spec, const EstimatorSpec& est, long long n, int reps,
                double q, bool normalized, Seed seed, const RunOptions& opts = {});

// One risk_mc row per n (sorted ascending).
RiskCurve risk_curve(const SupportSpec& spec, const EstimatorSpec& est,
                     std::vector<long long> n_grid, int reps, double q, bool normalized,
                     Seed seed, const RunOptions& opts = {});

// Least squares of log(y) (or log(y) - log(ln x)) against log(x).
RateFit fit_power_law(std::span<const double> xs, std::span<const double> ys,
                      bool log_correction = false);

RateFit rate_fit(const RiskCurve& curve, bool log_correction);

struct EfronReport {
  long long n;
  int reps;
  double lhs;  // E|G \ hull(n points)|
  double rhs;  // |G| E[V_{n+1}] / (n+1)
  double rel_err;
  double lhs_se;
  double rhs_se;
};

// Even child streams feed the missing-area side, odd ones the vertex-count side.
EfronReport efron_check(const SupportSpec& spec, long long n, int reps, Seed seed,
                        const RunOptions& opts = {});

// |G1 ∩ G2| / sqrt(|G1| |G2|) for uniform densities. Supported: planar
// polygon/disk pairs and concentric balls or corner-anchored cubes.
double hellinger_affinity(const SupportSpec& a, const SupportSpec& b);

struct VertexRow {
  long long n;
  double mean_vertices;
  double std_err;
};

struct VertexScaling {
  std::vector<VertexRow> rows;
  RateFit fit;
};

// Mean hull vertex count per n (sorted ascending).
std::vector<VertexRow> vertex_counts(const SupportSpec& spec, std::vector<long long> n_grid,
                                     int reps, Seed seed, const RunOptions& opts = {});

// vertex_counts plus a power-law fit of E[V_n] against n.
VertexScaling vertex_count_scaling(const SupportSpec& spec, std::vector<long long> n_grid,
                                   int reps, Seed seed, const RunOptions& opts = {});

struct TailRow {
  double x;
  double tail;
  double bound;
};

struct DeviationReport {
  long long n;
  int reps;
  int r;
  double centering;  // 4 d r ln n / n
  double mean_symm_diff;
  double std_err;
  std::vector<TailRow> rows;
};

// Tail of n (|P̂^(r) △ P| - 4 d r ln n / n) for a polygon support with r vertices.
DeviationReport deviation_tail(const SupportSpec& spec, long long n, int reps,
                               std::vector<double> x_grid, Seed seed,
                               const RunOptions& opts = {});

}  // namespace csest
