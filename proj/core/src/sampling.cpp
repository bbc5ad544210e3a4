#include "csest/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "csest/errors.hpp"

namespace csest {
namespace {

void check_scale(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    throw InvalidParameters(std::string(what) + " must be positive and finite");
  }
}

void check_dimension(int d) {
  if (d < 2 || d > kMaxDimension) {
    throw UnsupportedDimension("dimension must be in [2, " + std::to_string(kMaxDimension) +
                               "], got " + std::to_string(d));
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void sample_polygon(const geom2d::ConvexPolygon& p, std::size_t n, CounterRng& rng,
                    std::vector<double>& out) {
  const auto& v = p.vertices();
  std::vector<double> cumulative;
  cumulative.reserve(v.size() - 2);
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    total += 0.5 * geom2d::cross(v[i] - v[0], v[i + 1] - v[0]);
    cumulative.push_back(total);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double pick = rng.uniform() * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), pick);
    const std::size_t t = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()), cumulative.size() - 1);
    const geom2d::Point2& a = v[0];
    const geom2d::Point2& b = v[t + 1];
    const geom2d::Point2& c = v[t + 2];
    const double s = std::sqrt(rng.uniform());
    const double w = rng.uniform();
    out.push_back((1.0 - s) * a.x + s * (1.0 - w) * b.x + s * w * c.x);
    out.push_back((1.0 - s) * a.y + s * (1.0 - w) * b.y + s * w * c.y);
  }
}

void sample_disk(const DiskSupport& d, std::size_t n, CounterRng& rng, std::vector<double>& out) {
  const double r2 = d.radius * d.radius;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      const double rho = d.radius * std::sqrt(rng.uniform());
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      const double dx = rho * std::cos(theta);
      const double dy = rho * std::sin(theta);
      if (dx * dx + dy * dy <= r2) {
        out.push_back(d.center.x + dx);
        out.push_back(d.center.y + dy);
        break;
      }
    }
  }
}

void sample_ball(const BallSupport& b, std::size_t n, CounterRng& rng, std::vector<double>& out) {
  const auto d = static_cast<std::size_t>(b.dimension);
  std::vector<double> x(d);
  const double r2 = b.radius * b.radius;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      double len2 = 0.0;
      for (auto& c : x) {
        c = rng.normal();
        len2 += c * c;
      }
      if (len2 == 0.0) continue;
      const double rho = b.radius * std::pow(rng.uniform(), 1.0 / b.dimension);
      const double factor = rho / std::sqrt(len2);
      double check = 0.0;
      for (auto& c : x) {
        c *= factor;
        check += c * c;
      }
      if (check <= r2) {
        out.insert(out.end(), x.begin(), x.end());
        break;
      }
    }
  }
}

void sample_cube(const CubeSupport& c, std::size_t n, CounterRng& rng, std::vector<double>& out) {
  const std::size_t total = n * static_cast<std::size_t>(c.dimension);
  for (std::size_t k = 0; k < total; ++k) out.push_back(c.side * rng.uniform());
}

}  // namespace

SupportSpec SupportSpec::polygon(geom2d::ConvexPolygon p) {
  return SupportSpec(PolygonSupport{std::move(p)});
}

SupportSpec SupportSpec::disk(geom2d::Point2 center, double radius) {
  check_scale(radius, "disk radius");
  if (!std::isfinite(center.x) || !std::isfinite(center.y)) {
    throw InvalidParameters("disk center must be finite");
  }
  return SupportSpec(DiskSupport{center, radius});
}

SupportSpec SupportSpec::ball(int dimension, double radius) {
  check_dimension(dimension);
  check_scale(radius, "ball radius");
  return SupportSpec(BallSupport{dimension, radius});
}

SupportSpec SupportSpec::cube(int dimension, double side) {
  check_dimension(dimension);
  check_scale(side, "cube side");
  return SupportSpec(CubeSupport{dimension, side});
}

int SupportSpec::dimension() const {
  return std::visit(Overloaded{[](const PolygonSupport&) { return 2; },
                               [](const DiskSupport&) { return 2; },
                               [](const BallSupport& b) { return b.dimension; },
                               [](const CubeSupport& c) { return c.dimension; }},
                    value_);
}

std::optional<geom2d::ConvexPolygon> SupportSpec::as_polygon() const {
  if (const auto* p = std::get_if<PolygonSupport>(&value_)) return p->polygon;
  if (const auto* c = std::get_if<CubeSupport>(&value_); c && c->dimension == 2) {
    return geom2d::scaled(geom2d::unit_square(), c->side);
  }
  return std::nullopt;
}

std::optional<DiskSupport> SupportSpec::as_disk() const {
  if (const auto* d = std::get_if<DiskSupport>(&value_)) return *d;
  if (const auto* b = std::get_if<BallSupport>(&value_); b && b->dimension == 2) {
    return DiskSupport{{0.0, 0.0}, b->radius};
  }
  return std::nullopt;
}

SupportSpec SupportSpec::scaled(double s) const {
  check_scale(s, "scale factor");
  return std::visit(
      Overloaded{[s](const PolygonSupport& p) { return polygon(geom2d::scaled(p.polygon, s)); },
                 [s](const DiskSupport& d) { return disk(s * d.center, s * d.radius); },
                 [s](const BallSupport& b) { return ball(b.dimension, s * b.radius); },
                 [s](const CubeSupport& c) { return cube(c.dimension, s * c.side); }},
      value_);
}

std::vector<geom2d::Point2> PointCloud::planar() const {
  if (dim != 2) {
    throw DimensionMismatch("expected planar points, got dimension " + std::to_string(dim));
  }
  std::vector<geom2d::Point2> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {coords[2 * i], coords[2 * i + 1]};
  return out;
}

PointCloud sample_support(const SupportSpec& spec, std::size_t n, Seed seed) {
  PointCloud cloud;
  cloud.dim = spec.dimension();
  cloud.coords.reserve(n * static_cast<std::size_t>(cloud.dim));
  CounterRng rng(seed);
  std::visit(Overloaded{[&](const PolygonSupport& p) { sample_polygon(p.polygon, n, rng, cloud.coords); },
                        [&](const DiskSupport& d) { sample_disk(d, n, rng, cloud.coords); },
                        [&](const BallSupport& b) { sample_ball(b, n, rng, cloud.coords); },
                        [&](const CubeSupport& c) { sample_cube(c, n, rng, cloud.coords); }},
             spec.variant());
  return cloud;
}

std::vector<geom2d::Point2> sample_planar(const SupportSpec& spec, std::size_t n, Seed seed) {
  if (spec.dimension() != 2) {
    throw UnsupportedDimension("planar sampling needs a 2-D support, got dimension " +
                               std::to_string(spec.dimension()));
  }
  return sample_support(spec, n, seed).planar();
}

double ball_volume(int dimension, double radius) {
  const double d = dimension;
  return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0) * std::pow(radius, d);
}

double support_area(const SupportSpec& spec) {
  return std::visit(
      Overloaded{[](const PolygonSupport& p) { return geom2d::area(p.polygon); },
                 [](const DiskSupport& d) { return std::numbers::pi * d.radius * d.radius; },
                 [](const BallSupport& b) { return ball_volume(b.dimension, b.radius); },
                 [](const CubeSupport& c) { return std::pow(c.side, c.dimension); }},
      spec.variant());
}

bool membership(const SupportSpec& spec, std::span<const double> point) {
  if (point.size() != static_cast<std::size_t>(spec.dimension())) {
    throw DimensionMismatch("point has dimension " + std::to_string(point.size()) +
                            ", support has dimension " + std::to_string(spec.dimension()));
  }
  return std::visit(
      Overloaded{[&](const PolygonSupport& p) {
                   return geom2d::contains(p.polygon, {point[0], point[1]}, 1e-12);
                 },
                 [&](const DiskSupport& d) {
                   const double dx = point[0] - d.center.x;
                   const double dy = point[1] - d.center.y;
                   return dx * dx + dy * dy <= d.radius * d.radius;
                 },
                 [&](const BallSupport& b) {
                   double s = 0.0;
                   for (double c : point) s += c * c;
                   return s <= b.radius * b.radius;
                 },
                 [&](const CubeSupport& c) {
                   return std::all_of(point.begin(), point.end(),
                                      [&](double x) { return x >= 0.0 && x <= c.side; });
                 }},
      spec.variant());
}

}  // namespace csest
