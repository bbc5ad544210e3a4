#include "csest/predicates.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "csest/geom2d.hpp"

namespace csest::geom2d {
namespace {

struct TwoTerm {
  double hi;
  double lo;
};

TwoTerm two_sum(double a, double b) {
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  return {s, (a - av) + (b - bv)};
}

TwoTerm two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Adds `b` into a nonoverlapping expansion (Shewchuk's GROW-EXPANSION with
// zero elimination). Components stay ordered by increasing magnitude.
template <std::size_t N>
void grow_expansion(std::array<double, N>& e, std::size_t& len, double b) {
  std::size_t out = 0;
  double q = b;
  for (std::size_t i = 0; i < len; ++i) {
    const TwoTerm t = two_sum(q, e[i]);
    q = t.hi;
    if (t.lo != 0.0) e[out++] = t.lo;
  }
  if (q != 0.0) e[out++] = q;
  len = out;
}

int exact_orientation(const Point2& a, const Point2& b, const Point2& c) {
  // (ax-cx)(by-cy) - (ay-cy)(bx-cx) expanded into six exact products.
  const std::array<TwoTerm, 6> products = {
      two_product(a.x, b.y),  two_product(-a.x, c.y), two_product(-c.x, b.y),
      two_product(-a.y, b.x), two_product(a.y, c.x),  two_product(c.y, b.x),
  };
  std::array<double, 12> e{};
  std::size_t len = 0;
  for (const auto& p : products) {
    grow_expansion(e, len, p.lo);
    grow_expansion(e, len, p.hi);
  }
  if (len == 0) return 0;
  const double top = e[len - 1];
  return top > 0.0 ? 1 : (top < 0.0 ? -1 : 0);
}

}  // namespace

double orient_approx(const Point2& a, const Point2& b, const Point2& c) {
  return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  const double left = (a.x - c.x) * (b.y - c.y);
  const double right = (a.y - c.y) * (b.x - c.x);
  const double det = left - right;
  constexpr double eps = std::numeric_limits<double>::epsilon() / 2.0;
  constexpr double err_bound = (3.0 + 16.0 * eps) * eps;
  const double bound = err_bound * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return exact_orientation(a, b, c);
}

}  // namespace csest::geom2d
