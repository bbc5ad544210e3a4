#include "csest/hull_nd.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "csest/errors.hpp"

namespace csest::hull {
namespace {

using Vec = Eigen::VectorXd;

struct Facet {
  std::vector<int> verts;
  std::vector<int> neighbors;  // neighbors[k] shares the ridge without verts[k]
  Vec normal;
  double offset = 0.0;
  bool alive = true;
};

class Builder {
 public:
  Builder(std::span<const double> coords, int dim)
      : coords_(coords), dim_(dim), n_(coords.size() / static_cast<std::size_t>(dim)) {}

  Vec point(int i) const {
    return Eigen::Map<const Vec>(coords_.data() + static_cast<std::size_t>(i) * dim_, dim_);
  }

  void run() {
    scale_ = 0.0;
    for (double c : coords_) scale_ = std::max(scale_, std::abs(c));
    scale_ = std::max(scale_, 1e-300);
    eps_ = 1e-12 * scale_;

    const std::vector<int> simplex = initial_simplex();
    interior_ = Vec::Zero(dim_);
    for (int v : simplex) interior_ += point(v);
    interior_ /= static_cast<double>(simplex.size());

    for (int i = 0; i <= dim_; ++i) {
      Facet f;
      for (int j = 0; j <= dim_; ++j) {
        if (j == i) continue;
        f.verts.push_back(simplex[j]);
        f.neighbors.push_back(j);  // facet j omits simplex[j]
      }
      orient(f);
      facets_.push_back(std::move(f));
    }

    std::vector<char> in_simplex(n_, 0);
    for (int v : simplex) in_simplex[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!in_simplex[i]) insert(static_cast<int>(i));
    }
  }

  void export_to(std::vector<double>& normals, std::vector<double>& offsets,
                 std::vector<std::size_t>& vertices) const {
    std::vector<char> used(n_, 0);
    for (const auto& f : facets_) {
      if (!f.alive) continue;
      for (int k = 0; k < dim_; ++k) normals.push_back(f.normal[k]);
      offsets.push_back(f.offset);
      for (int v : f.verts) used[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (used[i]) vertices.push_back(i);
    }
  }

 private:
  std::vector<int> initial_simplex() const {
    if (n_ < static_cast<std::size_t>(dim_) + 1) {
      throw DegenerateInput("hull in dimension " + std::to_string(dim_) + " needs at least " +
                            std::to_string(dim_ + 1) + " points");
    }
    std::vector<int> chosen;
    int first = 0;
    for (std::size_t i = 1; i < n_; ++i) {
      if (coords_[i * dim_] < coords_[static_cast<std::size_t>(first) * dim_]) {
        first = static_cast<int>(i);
      }
    }
    chosen.push_back(first);
    const Vec origin = point(first);
    std::vector<Vec> basis;
    while (static_cast<int>(chosen.size()) <= dim_) {
      double best = -1.0;
      int best_i = -1;
      for (std::size_t i = 0; i < n_; ++i) {
        Vec r = point(static_cast<int>(i)) - origin;
        for (const auto& b : basis) r -= r.dot(b) * b;
        const double dist = r.norm();
        if (dist > best) {
          best = dist;
          best_i = static_cast<int>(i);
        }
      }
      if (best <= 1e-10 * scale_) throw DegenerateInput("points do not span the full dimension");
      Vec r = point(best_i) - origin;
      for (const auto& b : basis) r -= r.dot(b) * b;
      basis.push_back(r / r.norm());
      chosen.push_back(best_i);
    }
    return chosen;
  }

  void orient(Facet& f) const {
    const Vec base = point(f.verts[0]);
    Eigen::MatrixXd rows(dim_ - 1, dim_);
    for (int k = 1; k < dim_; ++k) rows.row(k - 1) = (point(f.verts[k]) - base).transpose();
    Vec normal;
    if (dim_ == 2) {
      normal = Vec(2);
      normal << -rows(0, 1), rows(0, 0);
    } else {
      Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
      normal = lu.kernel().col(0);
    }
    normal.normalize();
    if (normal.dot(interior_ - base) > 0.0) normal = -normal;
    f.normal = std::move(normal);
    f.offset = f.normal.dot(base);
  }

  void insert(int p) {
    const Vec x = point(p);
    std::vector<int> visible;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      const auto& f = facets_[i];
      if (f.alive && f.normal.dot(x) - f.offset > eps_) visible.push_back(static_cast<int>(i));
    }
    if (visible.empty()) return;
    for (int v : visible) facets_[static_cast<std::size_t>(v)].alive = false;

    std::map<std::vector<int>, std::pair<int, int>> open_ridges;
    for (int vi : visible) {
      for (int k = 0; k < dim_; ++k) {
        const int g = facets_[static_cast<std::size_t>(vi)].neighbors[static_cast<std::size_t>(k)];
        if (!facets_[static_cast<std::size_t>(g)].alive) continue;
        // Horizon ridge: replace the vertex opposite the ridge by p.
        Facet nf;
        nf.verts = facets_[static_cast<std::size_t>(vi)].verts;
        nf.verts[static_cast<std::size_t>(k)] = p;
        nf.neighbors.assign(static_cast<std::size_t>(dim_), -1);
        nf.neighbors[static_cast<std::size_t>(k)] = g;
        orient(nf);
        const int id = static_cast<int>(facets_.size());
        auto& gn = facets_[static_cast<std::size_t>(g)].neighbors;
        std::replace(gn.begin(), gn.end(), vi, id);

        for (int j = 0; j < dim_; ++j) {
          if (j == k) continue;
          std::vector<int> key;
          for (int t = 0; t < dim_; ++t) {
            if (t != j) key.push_back(nf.verts[static_cast<std::size_t>(t)]);
          }
          std::sort(key.begin(), key.end());
          auto it = open_ridges.find(key);
          if (it == open_ridges.end()) {
            open_ridges.emplace(std::move(key), std::make_pair(id, j));
          } else {
            const auto [other, slot] = it->second;
            nf.neighbors[static_cast<std::size_t>(j)] = other;
            facets_[static_cast<std::size_t>(other)].neighbors[static_cast<std::size_t>(slot)] = id;
            open_ridges.erase(it);
          }
        }
        facets_.push_back(std::move(nf));
      }
    }
  }

  std::span<const double> coords_;
  int dim_;
  std::size_t n_;
  double scale_ = 1.0;
  double eps_ = 0.0;
  Vec interior_;
  std::vector<Facet> facets_;
};

}  // namespace

ConvexHullND::ConvexHullND(std::span<const double> coords, int dim) : dim_(dim) {
  if (dim < 2 || dim > 10) {
    throw UnsupportedDimension("hull dimension must be in [2, 10], got " + std::to_string(dim));
  }
  if (coords.size() % static_cast<std::size_t>(dim) != 0) {
    throw DimensionMismatch("coordinate count is not a multiple of the dimension");
  }
  Builder b(coords, dim);
  b.run();
  b.export_to(normals_, offsets_, vertices_);
}

bool ConvexHullND::contains(std::span<const double> x, double tol) const {
  if (x.size() != static_cast<std::size_t>(dim_)) {
    throw DimensionMismatch("point dimension " + std::to_string(x.size()) +
                            " does not match hull dimension " + std::to_string(dim_));
  }
  for (std::size_t f = 0; f < offsets_.size(); ++f) {
    double s = 0.0;
    for (int k = 0; k < dim_; ++k) s += normals_[f * dim_ + k] * x[static_cast<std::size_t>(k)];
    if (s > offsets_[f] + tol) return false;
  }
  return true;
}

}  // namespace csest::hull
