#include "pettylab/error.hpp"
#include "pettylab/metrics/metrics.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <memory>
#include <optional>

namespace pettylab::metrics {

namespace {

// Root of f on [lo, hi] with f(lo) >= 0 > f(hi); returns the inside end of the final bracket.
template <class F>
double falling_root(F&& f, double lo, double flo, double hi, double fhi) {
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi,
                                                   boost::math::tools::eps_tolerance<double>(44), iters);
  return r.first;
}

struct Chord {
  double lo;
  double hi;
};

struct Hint {
  Chord chord;
  Vec base;
};

class Symmetral {
 public:
  Symmetral(MembershipFn gauge, int dim, const Vec& v, double reach)
      : gauge_(std::move(gauge)), dim_(dim), v_(v.normalized()), reach_(reach) {
    const auto c = chord(Vec::Zero(), std::nullopt);
    if (!c) throw Error(ErrorCode::NonConvexStar, "origin chord is empty");
    center_ = *c;
  }

  // {t : gauge(y + t v) <= 1}, empty when the line misses the body. A previous
  // nearby chord seeds the interior point and both endpoint brackets.
  std::optional<Chord> chord(const Vec& y, const std::optional<Hint>& hint) const {
    auto f = [&](double t) { return gauge_(y + t * v_); };
    const double span = reach_ + y.norm();
    double t0 = 0.0;
    bool found = false;
    for (double t : {hint ? 0.5 * (hint->chord.lo + hint->chord.hi) : 0.0, 0.0}) {
      if (f(t) <= 1.0) {
        t0 = t;
        found = true;
        break;
      }
    }
    if (!found) {
      // Golden-section descent on the convex restriction, stopping at the first interior point.
      const double g = 0.5 * (std::sqrt(5.0) - 1.0);
      double a = -span, b = span;
      double c = b - g * (b - a), d = a + g * (b - a);
      double fc = f(c), fd = f(d);
      while (b - a > 1e-15 * span) {
        if (fc <= 1.0) {
          t0 = c;
          found = true;
          break;
        }
        if (fd <= 1.0) {
          t0 = d;
          found = true;
          break;
        }
        if (fc <= fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - g * (b - a);
          fc = f(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + g * (b - a);
          fd = f(d);
        }
      }
      if (!found) return std::nullopt;
    }
    const double f0 = 1.0 - f(t0);
    const double step = hint ? std::max(1e-9 * span, 2.0 * (y - hint->base).norm()) : 0.0;
    const double up =
        edge(f, t0, f0, 1.0, hint ? std::optional(hint->chord.hi) : std::nullopt, step, span);
    const double down =
        edge(f, t0, f0, -1.0, hint ? std::optional(hint->chord.lo) : std::nullopt, step, span);
    return Chord{t0 - down, t0 + up};
  }

  double radial(const Vec& w_in) const {
    const Vec w = w_in.normalized();
    const double s = std::abs(w.dot(v_));
    const Vec perp = w - w.dot(v_) * v_;
    const double half0 = 0.5 * (center_.hi - center_.lo);
    if (perp.norm() < 1e-15) return half0;
    std::optional<Hint> hint = Hint{center_, Vec::Zero()};
    // F(r) = chord(r perp)/2 - r s; empty chords count as -1 - r s.
    auto F = [&](double r) {
      const Vec y = r * perp;
      const auto c = chord(y, hint);
      if (!c) return -1.0 - r * s;
      hint = Hint{*c, y};
      return 0.5 * (c->hi - c->lo) - r * s;
    };
    double hi = reach_;
    double fhi = F(hi);
    while (fhi >= 0.0) {
      hi *= 2.0;
      fhi = F(hi);
    }
    return falling_root(F, 0.0, half0, hi, fhi);
  }

  void check_projection(int base_points) const {
    const auto basis = orthogonal_basis(dim_, v_);
    for (const auto& e : basis) {
      int state = 0;  // 0 before, 1 inside, 2 after the projection
      for (int i = 0; i < base_points; ++i) {
        const double s = -reach_ + 2.0 * reach_ * i / (base_points - 1);
        const bool hit = chord(s * e, std::nullopt).has_value();
        if (hit && state == 2) throw Error(ErrorCode::NonConvexStar, "projection is not an interval");
        if (hit) state = 1;
        if (!hit && state == 1) state = 2;
      }
    }
  }

 private:
  // Distance from the interior point t0 to the boundary along dir (+-1), with
  // the bracket grown geometrically around `guess` when one is given.
  template <class F>
  static double edge(F& f, double t0, double f0, double dir, std::optional<double> guess,
                     double step, double span) {
    auto g = [&](double s) { return 1.0 - f(t0 + dir * s); };
    double lo = 0.0, glo = f0, hi = span, ghi = 0.0;
    const double sg = guess ? dir * (*guess - t0) : -1.0;
    if (sg > 0.0) {
      const double gg = g(sg);
      if (gg >= 0.0) {
        lo = sg;
        glo = gg;
        for (;;) {
          const double x = lo + step;
          const double gx = g(x);
          if (gx < 0.0) {
            hi = x;
            ghi = gx;
            break;
          }
          lo = x;
          glo = gx;
          step *= 8.0;
        }
      } else {
        hi = sg;
        ghi = gg;
        for (;;) {
          const double x = hi - step;
          if (x <= 0.0) break;
          const double gx = g(x);
          if (gx >= 0.0) {
            lo = x;
            glo = gx;
            break;
          }
          hi = x;
          ghi = gx;
          step *= 8.0;
        }
      }
    } else {
      ghi = g(hi);
      while (ghi >= 0.0) {
        lo = hi;
        glo = ghi;
        hi *= 2.0;
        ghi = g(hi);
      }
    }
    return falling_root(g, lo, glo, hi, ghi);
  }

  MembershipFn gauge_;
  int dim_;
  Vec v_;
  double reach_;
  Chord center_{};
};

}  // namespace

RadialOracle steiner_symmetral_of_star(MembershipFn gauge, int dim, const Vec& v, double reach,
                                       int base_points) {
  auto sym = std::make_shared<Symmetral>(std::move(gauge), dim, v, reach);
  if (base_points >= 2) sym->check_projection(base_points);
  return [sym](const Vec& w) { return sym->radial(w); };
}

RadialOracle steiner_symmetral_of_star(const orlicz::PolarStar& star, const Vec& v,
                                       int base_points) {
  // The Steiner symmetral lies in any centered ball containing the body.
  const auto grid = spherical_grid(star.dim(), star.dim() == 2 ? 256 : 512);
  double reach = 0.0;
  for (const auto& d : grid.directions) reach = std::max(reach, star.radial(d));
  reach *= 1.25;
  auto copy = std::make_shared<const orlicz::PolarStar>(star);
  return steiner_symmetral_of_star([copy](const Vec& x) { return copy->G(x); }, star.dim(), v,
                                   reach, base_points);
}

}  // namespace pettylab::metrics
