#pragma once

#include "pettylab/geometry/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace pettylab {

/// One facet of a polytope: an atom of the surface area measure.
struct Facet {
  Vec normal;               // exterior unit normal
  double area = 0.0;        // (n-1)-measure of the facet
  double support = 0.0;     // h_K(normal)
  std::vector<int> cycle;   // vertex indices, counter-clockwise seen from outside
};

/// Margin used when deciding whether the origin is interior.
inline constexpr double kInteriorMargin = 1e-9;

/// Convex polytope in R^2 or R^3, immutable after construction.
class Polytope {
 public:
  /// Convex hull of `points` (n+1 affinely independent points at least).
  static Polytope hull(int dim, std::span<const Vec> points);

  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Unique undirected edges as vertex index pairs.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool contains_origin_interior(double margin = kInteriorMargin) const;
  /// Throws OriginNotInterior unless every facet support exceeds the margin.
  void require_origin_interior() const;
  bool contains(const Vec& x, double tol = 0.0) const;

  double support(const Vec& x) const;
  double radial(const Vec& v) const;
  double polar_radial(const Vec& v) const;

  /// Volume by decomposition into simplices over facet fans from the vertex centroid.
  double volume() const;
  /// (1/n) * sum_i h_i a_i; only meaningful when the origin is interior.
  double volume_from_supports() const;
  /// Sum_i a_i u_i, zero for a closed boundary.
  Vec minkowski_residual() const;
  Vec vertex_centroid() const;

  Polytope transformed(const Mat& a) const;
  Polytope translated(const Vec& t) const;
  Polytope scaled(double c) const { return transformed(c * Mat::Identity()); }

 private:
  Polytope() = default;
  void derive(int dim, std::vector<Vec> vertices, std::vector<std::vector<int>> cycles,
              std::vector<Vec> normals);

  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace pettylab
