#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace csest::hull {

// Convex hull of a point cloud in R^d (2 <= d <= 10) built by incremental
// beneath-beyond insertion. Intended for random samples in general position;
// points within a relative 1e-12 of a facet plane are treated as interior.
class ConvexHullND {
 public:
  // `coords` is row-major, `dim` values per point.
  ConvexHullND(std::span<const double> coords, int dim);

  int dimension() const { return dim_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::size_t>& vertex_indices() const { return vertices_; }
  std::size_t facet_count() const { return offsets_.size(); }

  bool contains(std::span<const double> x, double tol = 1e-12) const;

 private:
  int dim_;
  std::vector<double> normals_;  // facet_count x dim, unit outward normals
  std::vector<double> offsets_;
  std::vector<std::size_t> vertices_;
};

}  // namespace csest::hull
