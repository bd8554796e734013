#include "pettylab/error.hpp"
#include "pettylab/symmetrize/symmetrize.hpp"

#include <algorithm>

namespace pettylab::sym {

namespace {

struct Point2 {
  double s;
  double t;
};

// Piecewise-linear chain with nondecreasing s, evaluated at increasing queries.
class ChainCursor {
 public:
  ChainCursor(const std::vector<Point2>& chain, bool lower) : chain_(chain), lower_(lower) {}

  double at(double s) {
    while (j_ + 1 < chain_.size() && chain_[j_ + 1].s < s) ++j_;
    // Points sharing this abscissa (vertical pieces at the ends).
    double best = lower_ ? 1e300 : -1e300;
    bool exact = false;
    for (std::size_t k = j_; k < chain_.size() && chain_[k].s <= s; ++k) {
      if (chain_[k].s == s) {
        best = lower_ ? std::min(best, chain_[k].t) : std::max(best, chain_[k].t);
        exact = true;
      }
    }
    if (exact) return best;
    if (j_ + 1 >= chain_.size()) return chain_.back().t;
    const Point2& a = chain_[j_];
    const Point2& b = chain_[j_ + 1];
    if (s <= a.s) return a.t;
    const double w = (s - a.s) / (b.s - a.s);
    return a.t + w * (b.t - a.t);
  }

 private:
  const std::vector<Point2>& chain_;
  bool lower_;
  std::size_t j_ = 0;
};

}  // namespace

Polytope steiner_2d(const Polytope& k, const Vec& v_in) {
  if (k.dim() != 2) throw Error(ErrorCode::PreconditionViolated, "steiner_2d needs a polygon");
  const Vec v = Vec(v_in.x(), v_in.y(), 0.0).normalized();
  const Vec w(v.y(), -v.x(), 0.0);  // (w, v) is positively oriented
  const auto& verts = k.vertices();   // counter-clockwise
  const int m = static_cast<int>(verts.size());
  std::vector<Point2> p(m);
  for (int i = 0; i < m; ++i) p[i] = {verts[i].dot(w), verts[i].dot(v)};

  auto lex_less = [&](int a, int b, bool prefer_low_t) {
    if (p[a].s != p[b].s) return p[a].s < p[b].s;
    return prefer_low_t ? p[a].t < p[b].t : p[a].t > p[b].t;
  };
  int left_bottom = 0, left_top = 0, right_bottom = 0, right_top = 0;
  for (int i = 1; i < m; ++i) {
    if (lex_less(i, left_bottom, true)) left_bottom = i;
    if (lex_less(i, left_top, false)) left_top = i;
    if (lex_less(right_bottom, i, false)) right_bottom = i;
    if (lex_less(right_top, i, true)) right_top = i;
  }
  std::vector<Point2> lower;
  for (int i = left_bottom;; i = (i + 1) % m) {
    lower.push_back(p[i]);
    if (i == right_bottom) break;
  }
  std::vector<Point2> upper;
  for (int i = right_top;; i = (i + 1) % m) {
    upper.push_back(p[i]);
    if (i == left_top) break;
  }
  std::reverse(upper.begin(), upper.end());

  std::vector<double> breaks(m);
  for (int i = 0; i < m; ++i) breaks[i] = p[i].s;
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  ChainCursor lo(lower, true);
  ChainCursor hi(upper, false);
  std::vector<Vec> out;
  out.reserve(2 * breaks.size());
  for (double s : breaks) {
    const double half = 0.5 * std::max(0.0, hi.at(s) - lo.at(s));
    out.push_back(s * w + half * v);
    out.push_back(s * w - half * v);
  }
  return Polytope::hull(2, out);
}

Polytope prune_polygon(const Polytope& k, double rel_area) {
  if (k.dim() != 2) throw Error(ErrorCode::PreconditionViolated, "prune_polygon needs a polygon");
  std::vector<Vec> ring = k.vertices();
  const double limit = rel_area * k.volume();
  auto loss = [&](std::size_t i) {
    const std::size_t m = ring.size();
    const Vec& a = ring[(i + m - 1) % m];
    const Vec& b = ring[i];
    const Vec& c = ring[(i + 1) % m];
    return 0.5 * std::abs((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
  };
  // Alternate the parity of removable indices so no two neighbours go in one sweep.
  int idle = 0;
  for (std::size_t parity = 0; idle < 2 && ring.size() > 3; parity ^= 1) {
    const std::size_t m = ring.size();
    std::vector<Vec> kept;
    kept.reserve(m);
    std::size_t removed = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const bool candidate = i % 2 == parity && !(m % 2 == 1 && i == m - 1);
      if (candidate && m - removed > 3 && loss(i) < limit) {
        ++removed;
        continue;
      }
      kept.push_back(ring[i]);
    }
    idle = removed == 0 ? idle + 1 : 0;
    ring.swap(kept);
  }
  return Polytope::hull(2, ring);
}

Polytope steiner_3d(const Polytope& k, const Vec& v_in, int grid_res, kernels::Exec exec) {
  if (k.dim() != 3) throw Error(ErrorCode::PreconditionViolated, "steiner_3d needs a 3-polytope");
  if (grid_res < 2) throw Error(ErrorCode::PreconditionViolated, "grid_res must be >= 2");
  const Vec v = v_in.normalized();
  const auto basis = orthogonal_basis(3, v);
  double a_lo = 1e300, a_hi = -1e300, b_lo = 1e300, b_hi = -1e300, scale = 0.0;
  for (const auto& x : k.vertices()) {
    const double a = x.dot(basis[0]);
    const double b = x.dot(basis[1]);
    a_lo = std::min(a_lo, a);
    a_hi = std::max(a_hi, a);
    b_lo = std::min(b_lo, b);
    b_hi = std::max(b_hi, b);
    scale = std::max(scale, x.norm());
  }
  const double tol = 1e-12 * scale;
  const auto& facets = k.facets();
  const std::size_t nodes = static_cast<std::size_t>(grid_res) * grid_res;
  std::vector<double> lower(nodes), length(nodes);
  auto base_point = [&](std::size_t idx) {
    const auto i = static_cast<double>(idx / grid_res);
    const auto j = static_cast<double>(idx % grid_res);
    const double a = a_lo + (a_hi - a_lo) * i / (grid_res - 1);
    const double b = b_lo + (b_hi - b_lo) * j / (grid_res - 1);
    return Vec(a * basis[0] + b * basis[1]);
  };
  // Chord {t : y + t v in K} from the facet inequalities; NaN when empty.
  kernels::map_indices(
      length,
      [&](std::size_t idx) {
        const Vec y = base_point(idx);
        double t_lo = -1e300, t_hi = 1e300;
        for (const auto& f : facets) {
          const double c = f.normal.dot(v);
          const double slack = f.support - f.normal.dot(y);
          if (std::abs(c) < 1e-14) {
            if (slack < -tol) return std::nan("");
          } else if (c > 0.0) {
            t_hi = std::min(t_hi, slack / c);
          } else {
            t_lo = std::max(t_lo, slack / c);
          }
        }
        if (t_hi - t_lo < -tol) return std::nan("");
        lower[idx] = t_lo;
        return std::max(0.0, t_hi - t_lo);
      },
      exec);
  std::vector<Vec> pts;
  for (std::size_t idx = 0; idx < nodes; ++idx) {
    if (std::isnan(length[idx])) continue;
    const Vec y = base_point(idx);
    pts.push_back(y + 0.5 * length[idx] * v);
    pts.push_back(y - 0.5 * length[idx] * v);
  }
  if (pts.empty()) throw Error(ErrorCode::EmptyProjection, "no grid node lies over the projection");
  return Polytope::hull(3, pts);
}

}  // namespace pettylab::sym
