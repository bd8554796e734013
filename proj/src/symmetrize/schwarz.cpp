#include "pettylab/error.hpp"
#include "pettylab/geometry/hull.hpp"
#include "pettylab/symmetrize/symmetrize.hpp"

#include <algorithm>

namespace pettylab::sym {

namespace {

constexpr double kPoleShrink = 1e-9;

double polygon_area(std::vector<Vec> pts) {
  if (pts.size() < 3) return 0.0;
  try {
    const auto ring = hull::convex_hull_2d(pts);
    CompensatedSum sum;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Vec& a = ring[i];
      const Vec& b = ring[(i + 1) % ring.size()];
      sum.add(0.5 * (a.x() * b.y() - a.y() * b.x()));
    }
    return std::max(0.0, sum.value());
  } catch (const Error&) {
    return 0.0;  // flat section
  }
}

// Slice radii are concave in exact arithmetic; sections a hair away from a pole
// carry rounding noise that the discrete concavity check would reject.
void concave_majorant(const std::vector<double>& t, std::vector<double>& r) {
  std::vector<std::size_t> upper;
  for (std::size_t i = 0; i < t.size(); ++i) {
    while (upper.size() >= 2) {
      const std::size_t a = upper[upper.size() - 2];
      const std::size_t b = upper.back();
      const double cross = (t[b] - t[a]) * (r[i] - r[a]) - (r[b] - r[a]) * (t[i] - t[a]);
      if (cross >= 0.0) upper.pop_back();
      else break;
    }
    upper.push_back(i);
  }
  double rmax = 0.0;
  for (double x : r) rmax = std::max(rmax, x);
  for (std::size_t k = 0; k + 1 < upper.size(); ++k) {
    const std::size_t a = upper[k];
    const std::size_t b = upper[k + 1];
    for (std::size_t i = a + 1; i < b; ++i) {
      const double lifted = r[a] + (r[b] - r[a]) * (t[i] - t[a]) / (t[b] - t[a]);
      if (lifted - r[i] > 1e-6 * rmax) {
        throw Error(ErrorCode::DegenerateBody, "slice radii are far from concave");
      }
      r[i] = std::max(r[i], lifted);
    }
  }
}

RevolutionBody profile_from_areas(int dim, const Vec& v, double half, int slices,
                                  const std::function<double(double)>& area, kernels::Exec exec) {
  if (slices < 64) throw Error(ErrorCode::PreconditionViolated, "slices must be >= 64");
  const double reach = half * (1.0 - kPoleShrink);
  std::vector<double> heights(slices);
  for (int i = 0; i < slices; ++i) heights[i] = -reach + 2.0 * reach * i / (slices - 1);
  heights.back() = reach;
  std::vector<double> radii(slices);
  const double kap = kappa(dim - 1);
  kernels::map_indices(
      radii,
      [&](std::size_t i) {
        const double a = area(heights[i]);
        return dim == 2 ? a / kap : std::sqrt(a / kap);
      },
      exec);
  concave_majorant(heights, radii);
  return RevolutionBody::from_profile(dim, v, std::move(heights), std::move(radii));
}

}  // namespace

double section_measure(const Polytope& k, const Vec& v, double t) {
  if (k.dim() == 2) {
    const Vec w(v.y(), -v.x(), 0.0);
    const Vec y = t * v;
    double s_lo = -1e300, s_hi = 1e300;
    for (const auto& f : k.facets()) {
      const double c = f.normal.dot(w);
      const double slack = f.support - f.normal.dot(y);
      if (std::abs(c) < 1e-14) {
        if (slack < 0.0) return 0.0;
      } else if (c > 0.0) {
        s_hi = std::min(s_hi, slack / c);
      } else {
        s_lo = std::max(s_lo, slack / c);
      }
    }
    return std::max(0.0, s_hi - s_lo);
  }
  const auto basis = orthogonal_basis(3, v);
  const auto& vs = k.vertices();
  std::vector<Vec> pts;
  auto emit = [&](const Vec& x) { pts.emplace_back(x.dot(basis[0]), x.dot(basis[1]), 0.0); };
  for (const auto& [a, b] : k.edges()) {
    const double da = vs[a].dot(v) - t;
    const double db = vs[b].dot(v) - t;
    if (da == 0.0) emit(vs[a]);
    if (db == 0.0) emit(vs[b]);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      const double w = da / (da - db);
      emit(vs[a] + w * (vs[b] - vs[a]));
    }
  }
  return polygon_area(std::move(pts));
}

double schwarz_offset(const Body& k, const Vec& v_in) {
  const Vec v = v_in.normalized();
  return 0.5 * (support(k, v) - support(k, -v));
}

RevolutionBody schwarz_round(const Polytope& k, const Vec& v_in, int slices, kernels::Exec exec) {
  Vec v = v_in;
  if (k.dim() == 2) v.z() = 0.0;
  v.normalize();
  const double hi = k.support(v);
  const double lo = -k.support(-v);
  const double center = 0.5 * (hi + lo);
  return profile_from_areas(
      k.dim(), v, 0.5 * (hi - lo), slices,
      [&](double t) { return section_measure(k, v, center + t); }, exec);
}

RevolutionBody schwarz_round(const RevolutionBody& k, const Vec& v_in, int slices,
                             kernels::Exec exec) {
  Vec v = v_in;
  if (k.dim() == 2) v.z() = 0.0;
  v.normalize();
  if (std::abs(std::abs(v.dot(k.axis())) - 1.0) > 1e-12) {
    return schwarz_round(to_polytope(k), v, slices, exec);
  }
  const double sign = v.dot(k.axis()) > 0.0 ? 1.0 : -1.0;
  const double hi = k.heights().back();
  const double lo = k.heights().front();
  const double center = 0.5 * (hi + lo);
  const double kap = kappa(k.dim() - 1);
  return profile_from_areas(
      k.dim(), v, 0.5 * (hi - lo), slices,
      [&](double t) { return kap * std::pow(k.radius_at(sign * (center + t)), k.dim() - 1); },
      exec);
}

RevolutionBody spin_normalize(const RevolutionBody& k) {
  const double r0 = k.radius_at(0.0);
  const double h = k.half_height();
  if (!(r0 > 0.0) || !(h > 0.0)) throw Error(ErrorCode::DegenerateBody, "zero equator or height");
  if (!k.is_symmetric()) throw Error(ErrorCode::DegenerateBody, "body is not o-symmetric");
  std::vector<double> t = k.heights();
  std::vector<double> r = k.radii();
  for (auto& x : t) x /= h;
  for (auto& x : r) x /= r0;
  t.front() = -1.0;
  t.back() = 1.0;
  return RevolutionBody::from_profile(k.dim(), k.axis(), std::move(t), std::move(r));
}

Polytope to_polytope(const RevolutionBody& k, int ring_samples) {
  const auto& t = k.heights();
  const auto& r = k.radii();
  const auto basis = orthogonal_basis(k.dim(), k.axis());
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Vec c = t[i] * k.axis();
    if (r[i] == 0.0) {
      pts.push_back(c);
    } else if (k.dim() == 2) {
      pts.push_back(c + r[i] * basis[0]);
      pts.push_back(c - r[i] * basis[0]);
    } else {
      for (int j = 0; j < ring_samples; ++j) {
        const double a = 2.0 * kPi * j / ring_samples;
        pts.push_back(c + r[i] * (std::cos(a) * basis[0] + std::sin(a) * basis[1]));
      }
    }
  }
  return Polytope::hull(k.dim(), pts);
}

}  // namespace pettylab::sym
