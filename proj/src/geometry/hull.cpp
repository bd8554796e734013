#include "pettylab/geometry/hull.hpp"

#include "pettylab/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace pettylab::hull {

namespace {

double extent(std::span<const Vec> points) {
  Vec lo = points.front();
  Vec hi = points.front();
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return std::max((hi - lo).maxCoeff(), 1e-300);
}

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Monotone chain on points already projected to 2D coordinates. Returns indices.
std::vector<int> monotone_chain(const std::vector<Vec>& pts, double eps) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (pts[a].x() != pts[b].x()) return pts[a].x() < pts[b].x();
    return pts[a].y() < pts[b].y();
  });
  if (order.size() < 3) return order;
  std::vector<int> chain(2 * order.size());
  std::size_t k = 0;
  for (int idx : order) {
    while (k >= 2 && cross2(pts[chain[k - 2]], pts[chain[k - 1]], pts[idx]) <= eps) --k;
    chain[k++] = idx;
  }
  const std::size_t lower = k + 1;
  for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
    while (k >= lower && cross2(pts[chain[k - 2]], pts[chain[k - 1]], pts[*it]) <= eps) --k;
    chain[k++] = *it;
  }
  chain.resize(k - 1);
  return chain;
}

struct Face {
  std::array<int, 3> v{};
  std::array<int, 3> nb{-1, -1, -1};  // neighbor across edge (v[i], v[i+1])
  Vec n = Vec::Zero();
  double d = 0.0;
  bool alive = true;
  std::vector<int> outside;
};

class IncrementalHull {
 public:
  IncrementalHull(std::span<const Vec> pts, double eps) : pts_(pts), eps_(eps) {}

  std::vector<Face> run() {
    init_simplex();
    std::vector<int> pending;
    for (std::size_t f = 0; f < faces_.size(); ++f) pending.push_back(static_cast<int>(f));
    while (!pending.empty()) {
      const int fi = pending.back();
      pending.pop_back();
      if (!faces_[fi].alive || faces_[fi].outside.empty()) continue;
      const int created_from = static_cast<int>(faces_.size());
      add_point(fi);
      for (int f = created_from; f < static_cast<int>(faces_.size()); ++f) {
        if (!faces_[f].outside.empty()) pending.push_back(f);
      }
    }
    return faces_;
  }

 private:
  double dist(const Face& f, int p) const { return f.n.dot(pts_[p]) - f.d; }

  void set_plane(Face& f, const Vec& fallback) {
    const Vec& a = pts_[f.v[0]];
    const Vec& b = pts_[f.v[1]];
    const Vec& c = pts_[f.v[2]];
    Vec n = (b - a).cross(c - a);
    const double len = n.norm();
    f.n = len > 0.0 ? Vec(n / len) : fallback;
    f.d = f.n.dot(a);
  }

  void init_simplex() {
    const int count = static_cast<int>(pts_.size());
    if (count < 4) throw Error(ErrorCode::DegenerateInput, "need at least 4 points in 3D");
    int i0 = 0;
    for (int i = 1; i < count; ++i) {
      if (pts_[i].x() < pts_[i0].x()) i0 = i;
    }
    auto farthest = [&](auto&& metric) {
      int best = -1;
      double best_val = -1.0;
      for (int i = 0; i < count; ++i) {
        const double m = metric(pts_[i]);
        if (m > best_val) {
          best_val = m;
          best = i;
        }
      }
      return std::pair{best, best_val};
    };
    auto [i1, d1] = farthest([&](const Vec& p) { return (p - pts_[i0]).norm(); });
    if (d1 <= eps_) throw Error(ErrorCode::DegenerateInput, "all points coincide");
    const Vec dir = (pts_[i1] - pts_[i0]).normalized();
    auto [i2, d2] = farthest([&](const Vec& p) {
      Vec w = p - pts_[i0];
      return (w - w.dot(dir) * dir).norm();
    });
    if (d2 <= eps_) throw Error(ErrorCode::DegenerateInput, "points are collinear");
    const Vec normal = dir.cross(pts_[i2] - pts_[i0]).normalized();
    auto [i3, d3] = farthest([&](const Vec& p) { return std::abs(normal.dot(p - pts_[i0])); });
    if (d3 <= eps_) throw Error(ErrorCode::DegenerateInput, "points are coplanar");

    const std::array<int, 4> s{i0, i1, i2, i3};
    const Vec centroid = (pts_[i0] + pts_[i1] + pts_[i2] + pts_[i3]) / 4.0;
    const std::array<std::array<int, 3>, 4> tri{{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}};
    for (const auto& t : tri) {
      Face f;
      f.v = {s[t[0]], s[t[1]], s[t[2]]};
      set_plane(f, Vec::UnitZ());
      if (f.n.dot(centroid) - f.d > 0.0) {
        std::swap(f.v[1], f.v[2]);
        set_plane(f, Vec::UnitZ());
      }
      faces_.push_back(f);
    }
    link_all();
    for (int p = 0; p < count; ++p) {
      if (p == i0 || p == i1 || p == i2 || p == i3) continue;
      for (auto& f : faces_) {
        if (dist(f, p) > eps_) {
          f.outside.push_back(p);
          break;
        }
      }
    }
  }

  void link_all() {
    std::unordered_map<long long, std::pair<int, int>> edge_owner;
    const long long base = static_cast<long long>(pts_.size()) + 1;
    for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi) {
      for (int e = 0; e < 3; ++e) {
        const int a = faces_[fi].v[e];
        const int b = faces_[fi].v[(e + 1) % 3];
        edge_owner[a * base + b] = {fi, e};
      }
    }
    for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi) {
      for (int e = 0; e < 3; ++e) {
        const int a = faces_[fi].v[e];
        const int b = faces_[fi].v[(e + 1) % 3];
        faces_[fi].nb[e] = edge_owner.at(b * base + a).first;
      }
    }
  }

  void add_point(int start_face) {
    Face& start = faces_[start_face];
    int apex = start.outside.front();
    double best = dist(start, apex);
    for (int p : start.outside) {
      const double d = dist(start, p);
      if (d > best) {
        best = d;
        apex = p;
      }
    }

    // Visible region by flood fill.
    std::vector<int> visible{start_face};
    std::vector<char> mark(faces_.size(), 0);
    mark[start_face] = 1;
    for (std::size_t k = 0; k < visible.size(); ++k) {
      const Face& f = faces_[visible[k]];
      for (int nb : f.nb) {
        if (mark[nb] == 0 && dist(faces_[nb], apex) > eps_) {
          mark[nb] = 1;
          visible.push_back(nb);
        }
      }
    }

    struct HorizonEdge {
      int a, b, outer;
    };
    std::vector<HorizonEdge> horizon;
    for (int fi : visible) {
      const Face& f = faces_[fi];
      for (int e = 0; e < 3; ++e) {
        if (mark[f.nb[e]] == 0) horizon.push_back({f.v[e], f.v[(e + 1) % 3], f.nb[e]});
      }
    }

    std::unordered_map<int, int> starts_at;
    std::unordered_map<int, int> ends_at;
    const int first_new = static_cast<int>(faces_.size());
    for (const auto& h : horizon) {
      Face f;
      f.v = {h.a, h.b, apex};
      set_plane(f, faces_[h.outer].n);
      f.nb[0] = h.outer;
      const int idx = static_cast<int>(faces_.size());
      Face& outer = faces_[h.outer];
      for (int e = 0; e < 3; ++e) {
        if (outer.v[e] == h.b && outer.v[(e + 1) % 3] == h.a) outer.nb[e] = idx;
      }
      starts_at[h.a] = idx;
      ends_at[h.b] = idx;
      faces_.push_back(std::move(f));
    }
    for (int fi = first_new; fi < static_cast<int>(faces_.size()); ++fi) {
      Face& f = faces_[fi];
      f.nb[1] = starts_at.at(f.v[1]);  // edge (b, apex) borders the face starting at b
      f.nb[2] = ends_at.at(f.v[0]);    // edge (apex, a) borders the face ending at a
    }

    for (int fi : visible) {
      Face& dead = faces_[fi];
      dead.alive = false;
      for (int p : dead.outside) {
        if (p == apex) continue;
        for (int nf = first_new; nf < static_cast<int>(faces_.size()); ++nf) {
          if (dist(faces_[nf], p) > eps_) {
            faces_[nf].outside.push_back(p);
            break;
          }
        }
      }
      dead.outside.clear();
      dead.outside.shrink_to_fit();
    }
  }

  std::span<const Vec> pts_;
  double eps_;
  std::vector<Face> faces_;
};

}  // namespace

std::vector<Vec> convex_hull_2d(std::span<const Vec> points) {
  if (points.size() < 3) throw Error(ErrorCode::DegenerateInput, "need at least 3 points in 2D");
  const double scale = extent(points);
  std::vector<Vec> pts(points.begin(), points.end());
  const auto idx = monotone_chain(pts, kCoplanarTolerance * scale * scale);
  if (idx.size() < 3) throw Error(ErrorCode::DegenerateInput, "points are collinear");
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(Vec(pts[i].x(), pts[i].y(), 0.0));
  return out;
}

Hull3 convex_hull_3d(std::span<const Vec> points) {
  const double scale = extent(points);
  const double eps = kCoplanarTolerance * scale;
  IncrementalHull builder(points, eps);
  std::vector<Face> faces = builder.run();

  std::vector<int> alive;
  std::vector<int> slot(faces.size(), -1);
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    if (faces[i].alive) {
      slot[i] = static_cast<int>(alive.size());
      alive.push_back(i);
    }
  }

  // Union coplanar neighbors.
  std::vector<int> parent(alive.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < alive.size(); ++k) {
    const Face& f = faces[alive[k]];
    for (int nb : f.nb) {
      const Face& g = faces[nb];
      bool coplanar = f.n.dot(g.n) > 0.0;
      for (int v : g.v) coplanar = coplanar && std::abs(f.n.dot(points[v]) - f.d) <= eps;
      for (int v : f.v) coplanar = coplanar && std::abs(g.n.dot(points[v]) - g.d) <= eps;
      if (coplanar) parent[find(static_cast<int>(k))] = find(slot[nb]);
    }
  }

  std::unordered_map<int, std::vector<int>> groups;
  for (std::size_t k = 0; k < alive.size(); ++k) groups[find(static_cast<int>(k))].push_back(alive[k]);

  std::vector<int> roots;
  for (const auto& [root, members] : groups) roots.push_back(root);
  std::sort(roots.begin(), roots.end());

  Hull3 out;
  std::unordered_map<int, int> vertex_slot;
  for (int root : roots) {
    const auto& members = groups[root];
    Vec normal = Vec::Zero();
    std::vector<int> ids;
    for (int fi : members) {
      const Face& f = faces[fi];
      normal += (points[f.v[1]] - points[f.v[0]]).cross(points[f.v[2]] - points[f.v[0]]);
      ids.insert(ids.end(), f.v.begin(), f.v.end());
    }
    if (normal.norm() == 0.0) normal = faces[members.front()].n;
    normal.normalize();
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    const auto basis = orthogonal_basis(3, normal);
    std::vector<Vec> planar_pts;
    planar_pts.reserve(ids.size());
    for (int id : ids) {
      planar_pts.emplace_back(points[id].dot(basis[0]), points[id].dot(basis[1]), 0.0);
    }
    // basis[0] x basis[1] = normal, so counter-clockwise in the plane is
    // counter-clockwise seen from outside.
    const auto chain = monotone_chain(planar_pts, eps * scale);
    if (chain.size() < 3) continue;
    HullFacet facet;
    facet.normal = normal;
    for (int c : chain) {
      const int id = ids[c];
      auto [it, inserted] = vertex_slot.try_emplace(id, static_cast<int>(out.vertices.size()));
      if (inserted) out.vertices.push_back(points[id]);
      facet.cycle.push_back(it->second);
    }
    out.facets.push_back(std::move(facet));
  }
  return out;
}

}  // namespace pettylab::hull
