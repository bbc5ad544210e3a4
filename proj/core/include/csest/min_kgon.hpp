#pragma once

#include <string_view>
#include <vector>

#include "csest/geom2d.hpp"

namespace csest::kgon {

enum class SolveStatus { exact_hull, dp_optimal, refined_heuristic };

std::string_view to_string(SolveStatus s);

struct KgonSolution {
  geom2d::ConvexPolygon polygon;
  double area;
  SolveStatus status;
  // Area of the best candidate before local polishing.
  double dp_area;
};

struct SolverOptions {
  // Distinct DP optima (by start edge) that get polished; all of them when the
  // hull has at most `polish_all_below` vertices.
  int polish_candidates = 4;
  int polish_all_below = 12;
  int max_polish_sweeps = 200;
};

// Minimum-area enclosing polygons with at most k vertices around a fixed
// convex polygon (the sample hull).
//
// Candidates come from a cyclic dynamic program over support lines: every
// line either runs flush with a hull edge or is a free tangent placed between
// two flush lines whose directions differ by at least pi (the free line is
// optimized exactly for its touching vertex). The best candidates are then
// polished by coordinate descent, moving one support line at a time to its
// optimal tangent position given its two neighbours.
class EnclosingPolygonSolver {
 public:
  explicit EnclosingPolygonSolver(const geom2d::ConvexPolygon& hull, SolverOptions opts = {});

  std::size_t hull_size() const;

  // Solutions for k = 3, ..., k_max (index k - 3). Area is non-increasing in k;
  // once k >= hull_size() the solution is the hull itself.
  std::vector<KgonSolution> solve_upto(int k_max) const;

  KgonSolution solve(int k) const;

 private:
  struct Impl;
  geom2d::ConvexPolygon hull_;
  SolverOptions opts_;
};

}  // namespace csest::kgon
