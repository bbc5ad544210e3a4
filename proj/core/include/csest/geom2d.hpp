#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "csest/predicates.hpp"

namespace csest::geom2d {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);

// Default absolute tolerance for containment tests on data inside [0,1]^2.
inline constexpr double kContainTol = 1e-9;

// Counterclockwise, strictly convex polygon with at least three vertices.
// Every constructor path validates the invariants with the exact orientation
// predicate, so a ConvexPolygon value is always well formed.
class ConvexPolygon {
 public:
  // Throws InvalidPolygon unless `vertices` is already CCW and strictly convex.
  explicit ConvexPolygon(std::vector<Point2> vertices);

  const std::vector<Point2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  std::vector<Point2> vertices_;
};

// Monotone chain hull. Collinear boundary points are not vertices.
// Throws DegenerateInput for fewer than 3 points or an all-collinear input.
ConvexPolygon convex_hull(std::span<const Point2> points);

// Number of hull vertices; 0..2 for degenerate input instead of throwing.
std::size_t hull_vertex_count(std::span<const Point2> points);

double area(const ConvexPolygon& p);
double perimeter(const ConvexPolygon& p);
Point2 centroid(const ConvexPolygon& p);

// True iff `pt` is on the non-right side of every directed edge within `tol`
// (signed Euclidean distance). tol == 0 uses the exact predicate.
bool contains(const ConvexPolygon& p, Point2 pt, double tol = kContainTol);

// Convex intersection by half-plane clipping; nullopt when the interiors are
// disjoint or the overlap collapses to a segment or point.
std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q);

// |P ∩ Q|, 0 when empty.
double intersection_area(const ConvexPolygon& p, const ConvexPolygon& q);

// |P \ Q| = |P| - |P ∩ Q|.
double difference_area(const ConvexPolygon& p, const ConvexPolygon& q);

// Nikodym distance |P △ Q|. Symmetric in its arguments bit for bit.
double symm_diff_area(const ConvexPolygon& p, const ConvexPolygon& q);

// Euclidean distance from `pt` to the polygon (0 inside).
double distance(const ConvexPolygon& p, Point2 pt);

// Hausdorff distance; for convex sets the maxima are attained at vertices.
double hausdorff(const ConvexPolygon& p, const ConvexPolygon& q);

// Rounds every vertex to the nearest point of (1/n)Z^2 and re-convexifies.
// Throws InvalidParameters for n < 2, DegenerateInput when the snapped
// polygon collapses.
ConvexPolygon grid_snap(const ConvexPolygon& p, int n);

// Exact area of P ∩ disk(center, radius).
double disk_intersection_area(const ConvexPolygon& p, Point2 center, double radius);

// Exact area of the intersection of two disks.
double disk_disk_intersection_area(Point2 c1, double r1, Point2 c2, double r2);

// Affine helpers used by experiments and tests.
ConvexPolygon scaled(const ConvexPolygon& p, double s, Point2 origin = {});
ConvexPolygon translated(const ConvexPolygon& p, Point2 offset);

// Regular m-gon with the given circumradius; first vertex at angle `phase`.
ConvexPolygon regular_polygon(int m, double circumradius, Point2 center = {},
                              double phase = 0.0);

ConvexPolygon unit_square();

}  // namespace csest::geom2d
