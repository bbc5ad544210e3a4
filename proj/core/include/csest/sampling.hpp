#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "csest/geom2d.hpp"
#include "csest/rng.hpp"

namespace csest {

inline constexpr int kMaxDimension = 10;

struct PolygonSupport {
  geom2d::ConvexPolygon polygon;
};

struct DiskSupport {
  geom2d::Point2 center;
  double radius;
};

// Centered at the origin.
struct BallSupport {
  int dimension;
  double radius;
};

// [0, side]^dimension.
struct CubeSupport {
  int dimension;
  double side;
};

// The true support G of the uniform distribution.
class SupportSpec {
 public:
  using Variant = std::variant<PolygonSupport, DiskSupport, BallSupport, CubeSupport>;

  static SupportSpec polygon(geom2d::ConvexPolygon p);
  static SupportSpec disk(geom2d::Point2 center, double radius);
  static SupportSpec ball(int dimension, double radius);
  static SupportSpec cube(int dimension, double side);

  const Variant& variant() const { return value_; }
  int dimension() const;

  // Planar view: polygons and 2-cubes as polygons, disks and 2-balls as disks.
  std::optional<geom2d::ConvexPolygon> as_polygon() const;
  std::optional<DiskSupport> as_disk() const;

  // Uniform scaling about the origin.
  SupportSpec scaled(double s) const;

 private:
  explicit SupportSpec(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

// Row-major point cloud; `dim` coordinates per point.
struct PointCloud {
  int dim = 2;
  std::vector<double> coords;

  std::size_t size() const { return coords.size() / static_cast<std::size_t>(dim); }
  std::span<const double> row(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
  // Throws DimensionMismatch unless dim == 2.
  std::vector<geom2d::Point2> planar() const;
};

// n i.i.d. uniform points on the support; a pure function of its arguments.
PointCloud sample_support(const SupportSpec& spec, std::size_t n, Seed seed);

// Convenience for planar supports; throws UnsupportedDimension otherwise.
std::vector<geom2d::Point2> sample_planar(const SupportSpec& spec, std::size_t n, Seed seed);

double support_area(const SupportSpec& spec);

// Exact membership. Polygon membership uses a 1e-12 boundary tolerance.
// Throws DimensionMismatch when the point dimension differs from the support's.
bool membership(const SupportSpec& spec, std::span<const double> point);

// Volume of the d-dimensional ball of the given radius.
double ball_volume(int dimension, double radius);

}  // namespace csest
