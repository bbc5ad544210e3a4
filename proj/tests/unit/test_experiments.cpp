#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "csest/errors.hpp"
#include "csest/experiments.hpp"
#include "oracles.hpp"

using namespace csest;
using geom2d::Point2;

namespace {
const SupportSpec kSquare = SupportSpec::polygon(geom2d::unit_square());
const SupportSpec kDisk = SupportSpec::disk({0, 0}, 1.0);
}  // namespace

TEST(EstimatorSpec, Labels) {
  EXPECT_EQ(EstimatorSpec::hull().label(), "hull");
  EXPECT_EQ(EstimatorSpec::kgon(4).label(), "kgon(4)");
  EXPECT_EQ(EstimatorSpec::adaptive({}).label(), "adaptive(C=40)");
}

TEST(RiskMc, Preconditions) {
  EXPECT_THROW(risk_mc(kSquare, EstimatorSpec::hull(), 2, 10, 1, false, {1, 0}), InvalidParameters);
  EXPECT_THROW(risk_mc(kSquare, EstimatorSpec::hull(), 10, 1, 1, false, {1, 0}), InvalidParameters);
  EXPECT_THROW(risk_mc(kSquare, EstimatorSpec::hull(), 10, 10, 0.5, false, {1, 0}), InvalidParameters);
  EXPECT_THROW(risk_mc(SupportSpec::ball(3, 1), EstimatorSpec::kgon(4), 100, 10, 1, false, {1, 0}),
               UnsupportedDimension);
  EXPECT_THROW(risk_mc(SupportSpec::cube(3, 1), EstimatorSpec::adaptive({}), 100, 10, 1, false, {1, 0}),
               UnsupportedDimension);
  AdaptiveConfig low;
  low.C = 10;
  EXPECT_THROW(risk_mc(kSquare, EstimatorSpec::adaptive(low), 100, 10, 1, false, {1, 0}), InvalidParameters);
}

TEST(RiskMc, SquareHullMatchesDirectMissingAreaAverage) {
  const Seed seed{51, 0};
  const int reps = 500;
  const long long n = 1000;
  const auto row = risk_mc(kSquare, EstimatorSpec::hull(), n, reps, 1.0, false, seed);
  double sum = 0;
  for (int i = 0; i < reps; ++i) {
    const auto pts = sample_planar(kSquare, n, seed.child(i).child(n));
    sum += 1.0 - oracle::shoelace(oracle::jarvis_hull(pts));
  }
  EXPECT_NEAR(row.mean_risk, sum / reps, 3 * row.std_err);
  EXPECT_NEAR(row.mean_risk, sum / reps, 1e-12);
  // ln n / n regime.
  EXPECT_GT(row.mean_risk, 0.5 * std::log(1000.0) / 1000);
  EXPECT_LT(row.mean_risk, 5.0 * std::log(1000.0) / 1000);
  EXPECT_EQ(row.reps, reps);
  EXPECT_EQ(row.seed, seed);
  EXPECT_EQ(row.estimator, "hull");
}

TEST(RiskMc, PolygonFitBelowCenteringTerm) {
  for (int r : {4, 5}) {
    const auto spec = SupportSpec::polygon(geom2d::regular_polygon(r, 0.5, {0.5, 0.5}));
    for (long long n : {100LL, 400LL}) {
      const auto row = risk_mc(spec, EstimatorSpec::kgon(r), n, 40, 1.0, false, {52, 0});
      EXPECT_LE(row.mean_risk, 8.0 * r * std::log(double(n)) / n);
    }
  }
}

TEST(RiskMc, ThreadCountDoesNotChangeResult) {
  const auto a = risk_mc(kDisk, EstimatorSpec::kgon(5), 300, 24, 2.0, true, {53, 1}, {1});
  const auto b = risk_mc(kDisk, EstimatorSpec::kgon(5), 300, 24, 2.0, true, {53, 1}, {4});
  EXPECT_EQ(a.mean_risk, b.mean_risk);
  EXPECT_EQ(a.std_err, b.std_err);
}

TEST(RiskMc, NormalizedRiskInvariantUnderScaling) {
  const auto base = SupportSpec::polygon(geom2d::regular_polygon(6, 0.5, {0.5, 0.5}));
  for (const auto& est : {EstimatorSpec::hull(), EstimatorSpec::kgon(4)}) {
    const auto a = risk_mc(base, est, 300, 20, 1.0, true, {54, 0});
    const auto b = risk_mc(base.scaled(3.0), est, 300, 20, 1.0, true, {54, 0});
    EXPECT_NEAR(a.mean_risk, b.mean_risk, 1e-9);
  }
}

TEST(RiskMc, RiskGrowsLinearlyWithSupportArea) {
  const double t = 0.7;
  const auto g1 = SupportSpec::disk({0, 0}, std::sqrt(t / std::numbers::pi));
  const auto g2 = SupportSpec::disk({0, 0}, std::sqrt(2 * t / std::numbers::pi));
  const auto a = risk_mc(g1, EstimatorSpec::hull(), 200, 50, 1.0, false, {55, 0});
  const auto b = risk_mc(g2, EstimatorSpec::hull(), 200, 50, 1.0, false, {55, 0});
  EXPECT_NEAR(b.mean_risk / a.mean_risk, 2.0, 1e-9);
}

TEST(RiskMc, HigherDimensionHullUsesProbes) {
  const auto row = risk_mc(SupportSpec::cube(3, 1.0), EstimatorSpec::hull(), 200, 4, 1.0, false,
                           {56, 0}, {1, 20000});
  EXPECT_GT(row.mean_risk, 0.0);
  EXPECT_LT(row.mean_risk, 1.0);
}

TEST(RiskCurve, SortedRows) {
  const auto c = risk_curve(kSquare, EstimatorSpec::hull(), {500, 100, 250}, 5, 1, false, {57, 0});
  ASSERT_EQ(c.rows.size(), 3u);
  EXPECT_EQ(c.rows[0].n, 100);
  EXPECT_EQ(c.rows[1].n, 250);
  EXPECT_EQ(c.rows[2].n, 500);
}

TEST(RateFit, ExactPowerLaws) {
  RiskCurve c;
  for (long long n : {100LL, 200LL, 400LL, 800LL}) c.rows.push_back({n, "x", 1, false, 7.0 / n, 0, 2, {}});
  const auto fit = rate_fit(c, false);
  EXPECT_NEAR(fit.slope, -1.0, 1e-12);
  EXPECT_NEAR(std::exp(fit.intercept), 7.0, 1e-9);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  for (auto& row : c.rows) row.mean_risk = 3.0 * std::log(double(row.n)) / row.n;
  EXPECT_NEAR(rate_fit(c, true).slope, -1.0, 1e-12);
  EXPECT_TRUE(rate_fit(c, true).log_correction);

  const std::vector<double> xs{10, 100, 1000, 10000};
  std::vector<double> ys;
  for (double x : xs) ys.push_back(std::cbrt(x));
  EXPECT_NEAR(fit_power_law(xs, ys).slope, 1.0 / 3.0, 1e-12);
}

TEST(RateFit, InsufficientData) {
  RiskCurve c;
  c.rows.push_back({100, "x", 1, false, 0.1, 0, 2, {}});
  c.rows.push_back({200, "x", 1, false, 0.05, 0, 2, {}});
  EXPECT_THROW(rate_fit(c, false), InsufficientData);
  c.rows.push_back({200, "x", 1, false, 0.04, 0, 2, {}});
  EXPECT_THROW(rate_fit(c, false), InsufficientData);
}

TEST(Efron, UnitAreaIdentityAndAgreement) {
  const Seed seed{58, 0};
  const auto rep = efron_check(kSquare, 100, 4000, seed);
  // With |G| = 1 the right side is the plain mean of V_{n+1} over n + 1.
  double v = 0, missing = 0;
  for (int i = 0; i < 4000; ++i) {
    v += oracle::jarvis_hull(sample_planar(kSquare, 101, seed.child(2 * i + 1))).size();
    missing += 1.0 - oracle::shoelace(oracle::jarvis_hull(sample_planar(kSquare, 100, seed.child(2 * i))));
  }
  EXPECT_NEAR(rep.rhs, v / 4000 / 101, 1e-12);
  EXPECT_NEAR(rep.lhs, missing / 4000, 1e-12);
  const double se = std::hypot(rep.lhs_se, rep.rhs_se);
  EXPECT_LT(std::abs(rep.lhs - rep.rhs), 4 * se);
  EXPECT_EQ(rep.rel_err, std::abs(rep.lhs - rep.rhs) / rep.rhs);
}

TEST(Efron, DiskAgreement) {
  const auto rep = efron_check(SupportSpec::disk({1, 1}, 2.0), 100, 4000, {59, 0});
  EXPECT_LT(std::abs(rep.lhs - rep.rhs), 4 * std::hypot(rep.lhs_se, rep.rhs_se));
}

TEST(Efron, DoublingRepsDoesNotIncreaseError) {
  const auto a = efron_check(kSquare, 60, 2000, {60, 0});
  const auto b = efron_check(kSquare, 60, 4000, {60, 0});
  const double slack = 2 * std::hypot(std::hypot(a.lhs_se, a.rhs_se), std::hypot(b.lhs_se, b.rhs_se));
  EXPECT_LE(std::abs(b.lhs - b.rhs), std::abs(a.lhs - a.rhs) + slack);
}

TEST(Efron, Preconditions) {
  EXPECT_THROW(efron_check(SupportSpec::ball(3, 1), 100, 10, {1, 0}), UnsupportedDimension);
  EXPECT_THROW(efron_check(kSquare, 2, 10, {1, 0}), InvalidParameters);
}

TEST(Hellinger, NestedBalls) {
  for (int d = 2; d <= 6; ++d) {
    const auto g1 = SupportSpec::ball(d, 1.0);
    const auto g2 = SupportSpec::ball(d, std::pow(2.0, 1.0 / d));
    EXPECT_NEAR(hellinger_affinity(g1, g2), 1.0 / std::sqrt(2.0), 1e-12) << "d = " << d;
  }
  EXPECT_NEAR(hellinger_affinity(SupportSpec::cube(4, 1.0), SupportSpec::cube(4, std::pow(2.0, 0.25))),
              1.0 / std::sqrt(2.0), 1e-12);
}

TEST(Hellinger, IdenticalDisjointAndMixed) {
  EXPECT_NEAR(hellinger_affinity(kSquare, kSquare), 1.0, 1e-15);
  EXPECT_NEAR(hellinger_affinity(kDisk, kDisk), 1.0, 1e-15);
  EXPECT_EQ(hellinger_affinity(kSquare, SupportSpec::disk({5, 5}, 1.0)), 0.0);
  EXPECT_EQ(hellinger_affinity(kSquare, SupportSpec::polygon(geom2d::translated(geom2d::unit_square(), {3, 0}))), 0.0);
  // Disk inscribed in the unit square: |D| / sqrt(|D| * 1).
  const auto inscribed = SupportSpec::disk({0.5, 0.5}, 0.5);
  EXPECT_NEAR(hellinger_affinity(kSquare, inscribed), std::sqrt(std::numbers::pi / 4), 1e-14);
  EXPECT_NEAR(hellinger_affinity(inscribed, kSquare), std::sqrt(std::numbers::pi / 4), 1e-14);
}

TEST(Hellinger, UnsupportedCombinations) {
  EXPECT_THROW(hellinger_affinity(SupportSpec::ball(3, 1), SupportSpec::cube(3, 1)), UnsupportedCombination);
  EXPECT_THROW(hellinger_affinity(SupportSpec::ball(3, 1), SupportSpec::ball(4, 1)), UnsupportedCombination);
  EXPECT_THROW(hellinger_affinity(kSquare, SupportSpec::ball(3, 1)), UnsupportedCombination);
}

TEST(VertexScaling, DiskSlopeAndThreeDimensions) {
  const auto vs = vertex_count_scaling(kDisk, {250, 1000, 4000}, 100, {61, 0});
  ASSERT_EQ(vs.rows.size(), 3u);
  EXPECT_GT(vs.fit.slope, 0.2);
  EXPECT_LT(vs.fit.slope, 0.45);
  const auto ball = vertex_count_scaling(SupportSpec::ball(3, 1.0), {100, 400, 1600}, 10, {62, 0});
  // Theory exponent (d - 1)/(d + 1) = 1/2.
  EXPECT_GT(ball.fit.slope, 0.3);
  EXPECT_LT(ball.fit.slope, 0.7);
}

TEST(DeviationTail, Preconditions) {
  EXPECT_THROW(deviation_tail(kSquare, 100, 999, {1.0}, {1, 0}), InvalidParameters);
  EXPECT_THROW(deviation_tail(kSquare, 100, 1000, {-1.0}, {1, 0}), InvalidParameters);
  EXPECT_THROW(deviation_tail(kDisk, 100, 1000, {1.0}, {1, 0}), InvalidParameters);
}

TEST(DeviationTail, SmallRun) {
  const auto rep = deviation_tail(kSquare, 100, 1000, {0.5, 1, 1e300}, {63, 0});
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_EQ(rep.r, 4);
  EXPECT_NEAR(rep.centering, 32 * std::log(100.0) / 100, 1e-15);
  EXPECT_EQ(rep.rows[2].tail, 0.0);
  EXPECT_LE(rep.rows[1].tail, rep.rows[0].tail);
  for (const auto& row : rep.rows) EXPECT_NEAR(row.bound, std::exp(-row.x / 2), 1e-15);
}
