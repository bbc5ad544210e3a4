#include "csest/geom2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "csest/errors.hpp"

namespace csest::geom2d {
namespace {

// Upper half-plane (including the positive x axis) sorts before the lower one.
bool upper_half(Point2 d) { return d.y > 0.0 || (d.y == 0.0 && d.x > 0.0); }

std::vector<Point2> monotone_chain(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 d = b - a;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * d));
}

// Signed area of disk(0, R) ∩ triangle(0, a, b).
double disk_triangle_area(Point2 a, Point2 b, double radius) {
  const Point2 d = b - a;
  const double qa = dot(d, d);
  if (qa == 0.0) return 0.0;
  const double qb = dot(a, d);
  const double qc = dot(a, a) - radius * radius;
  const double disc = qb * qb - qa * qc;

  double ts[4] = {0.0, 0.0, 0.0, 1.0};
  int count = 1;
  if (disc > 0.0) {
    const double s = std::sqrt(disc);
    const double t1 = (-qb - s) / qa;
    const double t2 = (-qb + s) / qa;
    if (t1 > 0.0 && t1 < 1.0) ts[count++] = t1;
    if (t2 > 0.0 && t2 < 1.0) ts[count++] = t2;
  }
  ts[count++] = 1.0;

  double total = 0.0;
  for (int i = 0; i + 1 < count; ++i) {
    const Point2 p = a + ts[i] * d;
    const Point2 q = a + ts[i + 1] * d;
    const Point2 mid = a + (0.5 * (ts[i] + ts[i + 1])) * d;
    if (disc > 0.0 && dot(mid, mid) < radius * radius) {
      total += 0.5 * cross(p, q);
    } else {
      total += 0.5 * radius * radius * std::atan2(cross(p, q), dot(p, q));
    }
  }
  return total;
}

bool lexicographically_before(const ConvexPolygon& p, const ConvexPolygon& q) {
  const auto& a = p.vertices();
  const auto& b = q.vertices();
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Point2& u, const Point2& v) { return u.x < v.x || (u.x == v.x && u.y < v.y); });
}

std::optional<ConvexPolygon> clip(const ConvexPolygon& subject, const ConvexPolygon& clipper) {
  std::vector<Point2> poly = subject.vertices();
  std::vector<Point2> next;
  const auto& cv = clipper.vertices();
  for (std::size_t e = 0; e < cv.size() && !poly.empty(); ++e) {
    const Point2 a = cv[e];
    const Point2 b = cv[(e + 1) % cv.size()];
    next.clear();
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point2 s = poly[i];
      const Point2 t = poly[(i + 1) % poly.size()];
      const int so = orientation(a, b, s);
      const int to = orientation(a, b, t);
      if (so >= 0) next.push_back(s);
      if ((so > 0 && to < 0) || (so < 0 && to > 0)) {
        const double ds = orient_approx(a, b, s);
        const double dt = orient_approx(a, b, t);
        const double lambda = ds / (ds - dt);
        next.push_back(s + lambda * (t - s));
      }
    }
    poly.swap(next);
  }
  std::vector<Point2> hull = monotone_chain(std::move(poly));
  if (hull.size() < 3) return std::nullopt;
  return ConvexPolygon(std::move(hull));
}

}  // namespace

double norm(Point2 a) { return std::hypot(a.x, a.y); }

ConvexPolygon::ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw InvalidPolygon("convex polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (const auto& v : vertices_) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw InvalidPolygon("convex polygon has a non-finite coordinate");
    }
  }
  int descents = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = vertices_[i];
    const Point2& b = vertices_[(i + 1) % n];
    const Point2& c = vertices_[(i + 2) % n];
    if (orientation(a, b, c) <= 0) {
      throw InvalidPolygon("vertices are not counterclockwise and strictly convex at index " +
                           std::to_string((i + 1) % n));
    }
    // With a strict left turn at b, the direction angle wraps past 0 exactly when
    // it moves from the lower to the upper half plane; both signs are exact.
    if (upper_half(c - b) && !upper_half(b - a)) ++descents;
  }
  // A locally convex loop that winds more than once has extra descents.
  if (descents != 1) throw InvalidPolygon("vertex loop winds more than once");
}

ConvexPolygon convex_hull(std::span<const Point2> points) {
  if (points.size() < 3) {
    throw DegenerateInput("convex hull needs at least 3 points, got " +
                          std::to_string(points.size()));
  }
  std::vector<Point2> hull = monotone_chain({points.begin(), points.end()});
  if (hull.size() < 3) throw DegenerateInput("all points are collinear");
  return ConvexPolygon(std::move(hull));
}

std::size_t hull_vertex_count(std::span<const Point2> points) {
  return monotone_chain({points.begin(), points.end()}).size();
}

double area(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    twice += cross(v[i] - v[0], v[i + 1] - v[0]);
  }
  return 0.5 * twice;
}

double perimeter(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) total += norm(v[(i + 1) % v.size()] - v[i]);
  return total;
}

Point2 centroid(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  double cx = 0.0;
  double cy = 0.0;
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const double w = cross(v[i] - v[0], v[i + 1] - v[0]);
    cx += w * (v[0].x + v[i].x + v[i + 1].x) / 3.0;
    cy += w * (v[0].y + v[i].y + v[i + 1].y) / 3.0;
    twice += w;
  }
  return {cx / twice, cy / twice};
}

bool contains(const ConvexPolygon& p, Point2 pt, double tol) {
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2& a = v[i];
    const Point2& b = v[(i + 1) % v.size()];
    if (tol == 0.0) {
      if (orientation(a, b, pt) < 0) return false;
    } else {
      const double signed_dist = orient_approx(a, b, pt) / norm(b - a);
      if (signed_dist < -tol) return false;
    }
  }
  return true;
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
  return clip(p, q);
}

double intersection_area(const ConvexPolygon& p, const ConvexPolygon& q) {
  // Canonical argument order keeps the result independent of call order.
  const auto overlap = lexicographically_before(q, p) ? clip(q, p) : clip(p, q);
  return overlap ? area(*overlap) : 0.0;
}

double difference_area(const ConvexPolygon& p, const ConvexPolygon& q) {
  return std::max(0.0, area(p) - intersection_area(p, q));
}

double symm_diff_area(const ConvexPolygon& p, const ConvexPolygon& q) {
  const double ap = area(p);
  const double aq = area(q);
  const double sum = lexicographically_before(q, p) ? aq + ap : ap + aq;
  return std::max(0.0, sum - 2.0 * intersection_area(p, q));
}

double distance(const ConvexPolygon& p, Point2 pt) {
  if (contains(p, pt, 0.0)) return 0.0;
  const auto& v = p.vertices();
  double best = segment_distance(pt, v.back(), v.front());
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    best = std::min(best, segment_distance(pt, v[i], v[i + 1]));
  }
  return best;
}

double hausdorff(const ConvexPolygon& p, const ConvexPolygon& q) {
  double h = 0.0;
  for (const auto& v : p.vertices()) h = std::max(h, distance(q, v));
  for (const auto& v : q.vertices()) h = std::max(h, distance(p, v));
  return h;
}

ConvexPolygon grid_snap(const ConvexPolygon& p, int n) {
  if (n < 2) throw InvalidParameters("grid_snap needs n >= 2, got " + std::to_string(n));
  const double scale = static_cast<double>(n);
  std::vector<Point2> snapped;
  snapped.reserve(p.size());
  for (const auto& v : p.vertices()) {
    snapped.push_back({std::round(v.x * scale) / scale, std::round(v.y * scale) / scale});
  }
  std::vector<Point2> hull = monotone_chain(std::move(snapped));
  if (hull.size() < 3) {
    throw DegenerateInput("polygon is thinner than the 1/" + std::to_string(n) + " grid");
  }
  return ConvexPolygon(std::move(hull));
}

double disk_intersection_area(const ConvexPolygon& p, Point2 center, double radius) {
  const auto& v = p.vertices();
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    total += disk_triangle_area(v[i] - center, v[(i + 1) % v.size()] - center, radius);
  }
  return std::max(0.0, total);
}

double disk_disk_intersection_area(Point2 c1, double r1, Point2 c2, double r2) {
  const double d = norm(c2 - c1);
  if (d >= r1 + r2) return 0.0;
  const double small = std::min(r1, r2);
  if (d <= std::abs(r1 - r2)) return std::numbers::pi * small * small;
  const double a1 = std::acos(std::clamp((d * d + r1 * r1 - r2 * r2) / (2.0 * d * r1), -1.0, 1.0));
  const double a2 = std::acos(std::clamp((d * d + r2 * r2 - r1 * r1) / (2.0 * d * r2), -1.0, 1.0));
  const double kite = 0.5 * std::sqrt(std::max(
      0.0, (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2)));
  return r1 * r1 * a1 + r2 * r2 * a2 - kite;
}

ConvexPolygon scaled(const ConvexPolygon& p, double s, Point2 origin) {
  std::vector<Point2> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(origin + s * (v - origin));
  return ConvexPolygon(std::move(out));
}

ConvexPolygon translated(const ConvexPolygon& p, Point2 offset) {
  std::vector<Point2> out;
  out.reserve(p.size());
  for (const auto& v : p.vertices()) out.push_back(v + offset);
  return ConvexPolygon(std::move(out));
}

ConvexPolygon regular_polygon(int m, double circumradius, Point2 center, double phase) {
  if (m < 3) throw InvalidParameters("regular polygon needs at least 3 vertices");
  std::vector<Point2> v;
  v.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    const double t = phase + 2.0 * std::numbers::pi * k / m;
    v.push_back({center.x + circumradius * std::cos(t), center.y + circumradius * std::sin(t)});
  }
  return ConvexPolygon(std::move(v));
}

ConvexPolygon unit_square() { return ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

}  // namespace csest::geom2d
