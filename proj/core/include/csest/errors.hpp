#pragma once

#include <stdexcept>
#include <string>

namespace csest {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fewer than three points, all points collinear, or a polygon that collapses.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// A vertex list that violates the ConvexPolygon invariants.
class InvalidPolygon : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class UnsupportedCombination : public Error {
 public:
  using Error::Error;
};

class InvalidParameters : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// Raised by lower-bound family checks with the first identity that failed.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace csest
