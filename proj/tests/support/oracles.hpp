#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "csest/geom2d.hpp"

namespace oracle {

using csest::geom2d::Point2;

// Gift wrapping in long double; returns CCW vertices without collinear points.
std::vector<Point2> jarvis_hull(const std::vector<Point2>& pts);

double shoelace(const std::vector<Point2>& poly);

// Support function h(phi) = max over points of (cos phi, sin phi) . v.
double support(const std::vector<Point2>& pts, double phi);

// Area of the polygon cut out by the supporting lines with outward normal
// angles `phis` (any order). Infinite when two consecutive sorted normals are
// at least pi apart.
double circumscribed_area(const std::vector<Point2>& hull, std::vector<double> phis);

// Brute-force minimum area of a polygon with r edges around `hull`: an
// exhaustive search over r-subsets of the hull edge normals plus a uniform
// angle grid, followed by pattern-search refinement of the best subsets.
double min_polygon_area(const std::vector<Point2>& hull, int r, int grid = 36);

// Minimum triangle with two edges flush against hull edges and the third a
// supporting line rotated over `steps` equally spaced angles.
double rotation_grid_triangle(const std::vector<Point2>& hull, int steps = 10000);

// Monte Carlo estimate of |P| from uniform draws over the bounding box.
struct McArea {
  double mean;
  double se;
};
McArea mc_area(const csest::geom2d::ConvexPolygon& p, std::size_t draws, std::mt19937_64& rng);

// Random convex polygon from the hull of `k` uniform points in [lo, hi]^2.
std::vector<Point2> random_hull(int k, std::mt19937_64& rng, double lo = 0.0, double hi = 1.0);

}  // namespace oracle
