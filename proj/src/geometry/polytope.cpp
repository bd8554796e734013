#include "pettylab/geometry/polytope.hpp"

#include "pettylab/error.hpp"
#include "pettylab/geometry/hull.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace pettylab {

Polytope Polytope::hull(int dim, std::span<const Vec> points) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::DegenerateInput, "dimension must be 2 or 3");
  if (static_cast<int>(points.size()) < dim + 1) {
    throw Error(ErrorCode::DegenerateInput, "need at least n+1 points");
  }
  Polytope p;
  if (dim == 2) {
    std::vector<Vec> flat;
    flat.reserve(points.size());
    for (const auto& q : points) flat.emplace_back(q.x(), q.y(), 0.0);
    auto ring = hull::convex_hull_2d(flat);
    const int m = static_cast<int>(ring.size());
    std::vector<std::vector<int>> cycles;
    std::vector<Vec> normals;
    for (int i = 0; i < m; ++i) {
      const int j = (i + 1) % m;
      const Vec e = ring[j] - ring[i];
      cycles.push_back({i, j});
      normals.push_back(Vec(e.y(), -e.x(), 0.0).normalized());
    }
    p.derive(2, std::move(ring), std::move(cycles), std::move(normals));
  } else {
    auto h = hull::convex_hull_3d(points);
    std::vector<std::vector<int>> cycles;
    std::vector<Vec> normals;
    for (auto& f : h.facets) {
      cycles.push_back(std::move(f.cycle));
      normals.push_back(f.normal);
    }
    p.derive(3, std::move(h.vertices), std::move(cycles), std::move(normals));
  }
  return p;
}

void Polytope::derive(int dim, std::vector<Vec> vertices, std::vector<std::vector<int>> cycles,
                      std::vector<Vec> normals) {
  dim_ = dim;
  vertices_ = std::move(vertices);
  facets_.clear();
  std::set<std::pair<int, int>> edge_set;
  for (std::size_t f = 0; f < cycles.size(); ++f) {
    Facet facet;
    auto& cyc = cycles[f];
    if (dim == 2) {
      const Vec e = vertices_[cyc[1]] - vertices_[cyc[0]];
      facet.area = e.norm();
      facet.normal = normals[f];
    } else {
      // Newell's vector area of the facet polygon.
      Vec area_vec = Vec::Zero();
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        area_vec += vertices_[cyc[k]].cross(vertices_[cyc[(k + 1) % cyc.size()]]);
      }
      area_vec *= 0.5;
      facet.area = area_vec.norm();
      facet.normal = facet.area > 0.0 ? Vec(area_vec / facet.area) : normals[f];
    }
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices_) h = std::max(h, v.dot(facet.normal));
    facet.support = h;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      const int a = cyc[k];
      const int b = cyc[(k + 1) % cyc.size()];
      if (dim == 3 || k == 0) edge_set.insert({std::min(a, b), std::max(a, b)});
    }
    facet.cycle = std::move(cyc);
    if (facet.area > 0.0) facets_.push_back(std::move(facet));
  }
  edges_.assign(edge_set.begin(), edge_set.end());
}

bool Polytope::contains_origin_interior(double margin) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [margin](const Facet& f) { return f.support > margin; });
}

void Polytope::require_origin_interior() const {
  if (!contains_origin_interior()) {
    throw Error(ErrorCode::OriginNotInterior, "origin is not interior to the polytope");
  }
}

bool Polytope::contains(const Vec& x, double tol) const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.normal.dot(x) <= f.support + tol; });
}

double Polytope::support(const Vec& x) const {
  double h = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) h = std::max(h, v.dot(x));
  return h;
}

double Polytope::radial(const Vec& v) const {
  require_origin_interior();
  double rho = std::numeric_limits<double>::infinity();
  for (const auto& f : facets_) {
    const double c = v.dot(f.normal);
    if (c > 0.0) rho = std::min(rho, f.support / c);
  }
  return rho;
}

double Polytope::polar_radial(const Vec& v) const {
  require_origin_interior();
  return 1.0 / support(v);
}

Vec Polytope::vertex_centroid() const {
  Vec c = Vec::Zero();
  for (const auto& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

double Polytope::volume() const {
  const Vec c = vertex_centroid();
  CompensatedSum sum;
  if (dim_ == 2) {
    for (const auto& f : facets_) {
      const Vec a = vertices_[f.cycle[0]] - c;
      const Vec b = vertices_[f.cycle[1]] - c;
      sum.add(0.5 * (a.x() * b.y() - a.y() * b.x()));
    }
  } else {
    for (const auto& f : facets_) {
      const Vec p0 = vertices_[f.cycle[0]] - c;
      for (std::size_t k = 1; k + 1 < f.cycle.size(); ++k) {
        const Vec p1 = vertices_[f.cycle[k]] - c;
        const Vec p2 = vertices_[f.cycle[k + 1]] - c;
        sum.add(p0.dot(p1.cross(p2)) / 6.0);
      }
    }
  }
  return sum.value();
}

double Polytope::volume_from_supports() const {
  CompensatedSum sum;
  for (const auto& f : facets_) sum.add(f.support * f.area);
  return sum.value() / dim_;
}

Vec Polytope::minkowski_residual() const {
  Vec r = Vec::Zero();
  for (const auto& f : facets_) r += f.area * f.normal;
  return r;
}

Polytope Polytope::transformed(const Mat& a) const {
  std::vector<Vec> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) pts.push_back(a * v);
  if (dim_ == 2) {
    for (auto& q : pts) q.z() = 0.0;
  }
  return hull(dim_, pts);
}

Polytope Polytope::translated(const Vec& t) const {
  std::vector<Vec> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) pts.push_back(v + t);
  return hull(dim_, pts);
}

}  // namespace pettylab
