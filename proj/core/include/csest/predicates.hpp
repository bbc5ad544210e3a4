#pragma once

namespace csest::geom2d {

struct Point2;

// Sign of the orientation determinant of (a, b, c): +1 for a strict left turn,
// -1 for a strict right turn, 0 when exactly collinear. The result is exact for
// all finite double inputs (floating-point filter with an expansion-arithmetic
// fallback).
int orientation(const Point2& a, const Point2& b, const Point2& c);

// Twice the signed area of (a, b, c) in plain floating point.
double orient_approx(const Point2& a, const Point2& b, const Point2& c);

}  // namespace csest::geom2d
