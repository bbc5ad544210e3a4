#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "csest/errors.hpp"
#include "csest/lower_bound.hpp"
#include "oracles.hpp"

using namespace csest;
using geom2d::Point2;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Family, DeltaExample) {
  const auto f = build_family(10, 0.5);
  // 0.25 * cos(36 deg) * tan(72 deg), with the golden ratio form of cos(36 deg).
  const double cos36 = (1 + std::sqrt(5.0)) / 4;
  const double tan72 = std::sqrt(5 + 2 * std::sqrt(5.0));
  EXPECT_NEAR(f.delta, 0.25 * cos36 * tan72, 1e-14);
  EXPECT_NEAR(f.delta, 0.622475, 1e-6);
}

TEST(Family, SizeAndBase) {
  const auto f = build_family(10, 0.5);
  EXPECT_EQ(f.member_count(), 32u);
  EXPECT_EQ(f.half(), 5u);
  const auto empty = f.member(0);
  EXPECT_EQ(empty, f.base);
  EXPECT_EQ(empty.size(), 5u);
  EXPECT_NEAR(geom2d::area(empty), 2.5 * 0.25 * std::sin(2 * kPi / 5), 1e-15);
  for (const auto& v : empty.vertices()) EXPECT_NEAR(geom2d::norm(v - Point2{0.5, 0.5}), 0.5, 1e-15);
  EXPECT_EQ(build_family(40, 0.1).member_count(), std::uint64_t{1} << 20);
}

TEST(Family, RejectsInvalidParameters) {
  EXPECT_THROW(build_family(9, 0.5), InvalidParameters);
  EXPECT_THROW(build_family(8, 0.5), InvalidParameters);
  EXPECT_THROW(build_family(11, 0.5), InvalidParameters);
  EXPECT_THROW(build_family(10, 0.0), InvalidParameters);
  EXPECT_THROW(build_family(10, 1.5), InvalidParameters);
  EXPECT_NO_THROW(build_family(10, 1.0));
}

TEST(Family, ApexesOnBisectorsAtDistanceDelta) {
  const auto f = build_family(12, 0.3);
  for (std::size_t k = 0; k < f.half(); ++k) {
    const auto& a = f.base[k];
    const auto& b = f.base[(k + 1) % f.half()];
    const auto& x = f.apexes[k];
    EXPECT_NEAR(geom2d::norm(x - a), geom2d::norm(x - b), 1e-14);
    EXPECT_NEAR(geom2d::distance(f.base, x), f.delta, 1e-14);
  }
}

TEST(Family, MembersAreNestedInBaseAndNeverExceedRVertices) {
  const auto f = build_family(12, 0.2);
  for (std::uint64_t w = 0; w < f.member_count(); ++w) {
    const auto p = f.member(w);
    EXPECT_LE(static_cast<int>(p.size()), f.r);
    for (const auto& v : f.base.vertices()) EXPECT_TRUE(geom2d::contains(p, v, 1e-12));
  }
}

TEST(Family, AdjacentPairsDifferByOneApexTriangle) {
  // With a small apex distance every apex triangle sits on its own base edge,
  // so the pair difference is the triangle (A_2k, apex, A_2k+2) whose base is
  // the (r/2)-gon side sin(2 pi / r).
  for (int r : {10, 12, 20}) {
    const auto f = build_family(r, 0.1);
    const auto rep = inspect_family(f, 1000);
    const std::vector<Point2> tri{f.base[0], f.apexes[0], f.base[1]};
    const double triangle = std::abs(oracle::shoelace(tri));
    EXPECT_NEAR(triangle, f.delta / 2 * std::sin(2 * kPi / r), 1e-15);
    EXPECT_NEAR(rep.min_pair_diff, triangle, 1e-12) << "r = " << r;
    EXPECT_NEAR(rep.max_pair_diff, triangle, 1e-12) << "r = " << r;
  }
}

TEST(Family, NestedAreaGapEqualsSymmetricDifference) {
  for (int r : {10, 12}) {
    for (double h : {0.1, 1.0}) {
      const auto f = build_family(r, h);
      for (std::size_t k = 0; k < f.half(); ++k) {
        const std::uint64_t bit = std::uint64_t{1} << k;
        for (std::uint64_t w = 0; w < f.member_count(); ++w) {
          if (w & bit) continue;
          const auto p0 = f.member(w);
          const auto p1 = f.member(w | bit);
          ASSERT_NEAR(geom2d::symm_diff_area(p0, p1), geom2d::area(p1) - geom2d::area(p0), 1e-13);
        }
      }
    }
  }
}

TEST(Family, MinimumAffinityIsBaseAgainstOneApex) {
  // Small apex distances keep every base vertex on the hull, so the least
  // similar adjacent pair is the base against the base plus one triangle.
  for (int r : {10, 12, 20}) {
    const auto f = build_family(r, 0.1);
    const auto rep = inspect_family(f, 1000);
    std::vector<Point2> base(f.base.vertices().begin(), f.base.vertices().end());
    const double base_area = oracle::shoelace(base);
    const double tri = f.delta * std::sin(2 * kPi / r) / 2;
    EXPECT_NEAR(rep.min_affinity, std::sqrt(base_area / (base_area + tri)), 1e-12) << r;
    EXPECT_GE(rep.min_affinity, std::sqrt(1 - f.delta * std::sin(2 * kPi / r)));
    EXPECT_GE(rep.base_area, 0.5);
  }
}

TEST(Family, AffinityBoundViolationIsReported) {
  for (int r : {10, 12, 20}) {
    for (double h : {0.1, 0.5, 1.0}) {
      const auto rep = inspect_family(build_family(r, h), 1000);
      const bool violated = rep.min_affinity < rep.affinity_bound - 1e-9;
      const bool reported = std::any_of(rep.failures.begin(), rep.failures.end(), [](const std::string& m) {
        return m.find("affinity bound") != std::string::npos;
      });
      EXPECT_EQ(violated, reported) << r << " " << h;
    }
  }
}

TEST(FamilyChecks, StatedPairIdentityDoesNotMatchGeometry) {
  // The pair difference equals (delta/2) sin(2 pi/r), not (delta/2) cos(2 pi/r).
  const auto f = build_family(10, 0.1);
  const auto rep = inspect_family(f, 1000);
  ASSERT_FALSE(rep.passed());
  EXPECT_NE(rep.failures.front().find("pairwise distance"), std::string::npos);
  EXPECT_NEAR(rep.expected_pair_diff, f.delta / 2 * std::cos(2 * kPi / 10), 1e-15);
  try {
    family_checks(f, 1000);
    FAIL() << "expected CheckFailed";
  } catch (const CheckFailed& e) {
    EXPECT_NE(std::string(e.what()).find("pairwise distance"), std::string::npos);
  }
}

TEST(FamilyChecks, ApexDistanceMatchingTheIdentityPassesPairwiseCheck) {
  const int r = 10;
  const double h = 0.1;
  const double delta = family_delta(r, h);
  const double apex = delta * std::cos(2 * kPi / r) / std::sin(2 * kPi / r);
  const auto f = build_family_with_apex_distance(r, h, apex);
  const auto rep = inspect_family(f, 1000);
  EXPECT_LT(rep.max_pair_diff_error, kFamilyPairTol);
  for (const auto& msg : rep.failures) EXPECT_EQ(msg.find("pairwise"), std::string::npos) << msg;
}

TEST(FamilyChecks, TamperedApexDistanceFailsPairwise) {
  const auto f = build_family_with_apex_distance(10, 0.1, 0.01);
  try {
    family_checks(f, 1000);
    FAIL() << "expected CheckFailed";
  } catch (const CheckFailed& e) {
    EXPECT_NE(std::string(e.what()).find("pairwise distance"), std::string::npos);
  }
}

TEST(FamilyChecks, LargeDeltaLeavesUnitSquare) {
  const auto rep = inspect_family(build_family(10, 1.0), 1000);
  EXPECT_FALSE(rep.members_in_unit_square);
  // Apexes sit 0.5 cos(2 pi/r) + delta from the center; h = 0.05 keeps them inside.
  const auto small = inspect_family(build_family(10, 0.05), 1000);
  EXPECT_TRUE(small.members_in_unit_square);
}

TEST(FamilyBound, OrderROverN) {
  const int r = 10;
  const long long n = 1000;
  const double h = double(r) / n;
  const auto rep = inspect_family(build_family(r, h), n);
  const double dc = family_delta(r, h) * std::cos(2 * kPi / r);
  EXPECT_NEAR(rep.lower_bound_value, r * dc / 8 * std::pow(1 - dc / 4, double(n)), 1e-18);
  EXPECT_GT(rep.lower_bound_value, 0.0);
  EXPECT_GT(rep.lower_bound_value, 0.01 * r / n);
  EXPECT_LT(rep.lower_bound_value, 10.0 * r / n);
}
