#include "pettylab/orlicz/projection.hpp"

#include "pettylab/error.hpp"
#include "pettylab/geometry/body.hpp"

#include <algorithm>
#include <cmath>

namespace pettylab::orlicz {

namespace {

constexpr int kMaxDoublings = 60;
constexpr double kRootTolerance = 1e-14;

// Bisection for a nondecreasing f on [lo, hi] with f(lo) <= 1 < f(hi).
template <class F>
double bisect_level(F&& f, double lo, double hi) {
  while (hi - lo > kRootTolerance * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) <= 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ConeVolumeMeasure cone_volume_measure(const Polytope& k) {
  k.require_origin_interior();
  const double nv = k.dim() * k.volume();
  ConeVolumeMeasure m;
  CompensatedSum total;
  for (const auto& f : k.facets()) {
    ConeAtom atom{f.normal, f.support * f.area / nv, f.support, f.area};
    total.add(atom.mass);
    m.atoms.push_back(atom);
  }
  m.total_mass = total.value();
  return m;
}

double classical_projection_support(const Polytope& k, const Vec& x) {
  CompensatedSum sum;
  for (const auto& f : k.facets()) sum.add(std::abs(x.dot(f.normal)) * f.area);
  return 0.5 * sum.value();
}

double lp_support(const Polytope& k, double p, const Vec& x) {
  if (!(p >= 1.0)) throw Error(ErrorCode::PreconditionViolated, "lp_support needs p >= 1");
  k.require_origin_interior();
  if (x.isZero(0.0)) return 0.0;
  CompensatedSum sum;
  for (const auto& f : k.facets()) {
    sum.add(std::pow(std::abs(x.dot(f.normal)), p) * std::pow(f.support, 1.0 - p) * f.area);
  }
  return std::pow(sum.value() / (k.dim() * k.volume()), 1.0 / p);
}

double orlicz_support(const Polytope& k, const Phi& phi, const Vec& x) {
  const auto m = cone_volume_measure(k);
  if (x.isZero(0.0)) return 0.0;
  // F(lambda) = sum_i phi(x.u_i / (lambda h_i)) m_i is nonincreasing in lambda.
  std::vector<double> a;
  for (const auto& atom : m.atoms) a.push_back(x.dot(atom.normal) / atom.support);
  auto F = [&](double lambda) {
    CompensatedSum s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add(phi(a[i] / lambda) * m.atoms[i].mass);
    return s.value();
  };
  double lo = x.norm();
  double hi = lo;
  for (int i = 0; F(hi) > 1.0; ++i) {
    if (i > 4 * kMaxDoublings) throw Error(ErrorCode::UnboundedDirection, "no upper bracket for lambda");
    hi *= 2.0;
  }
  for (int i = 0; F(lo) <= 1.0; ++i) {
    if (i > 4 * kMaxDoublings) throw Error(ErrorCode::UnboundedDirection, "phi degenerates along x");
    lo *= 0.5;
  }
  // g(mu) = F(1/mu) is nondecreasing in mu = 1/lambda.
  const double mu = bisect_level([&](double t) { return F(1.0 / t); }, 1.0 / hi, 1.0 / lo);
  return 1.0 / mu;
}

PolarStar::PolarStar(const Polytope& k, Phi phi)
    : dim_(k.dim()), phi_(std::move(phi)), measure_(cone_volume_measure(k)) {
  double min_h = 1e300;
  for (const auto& atom : measure_.atoms) {
    scaled_normals_.push_back(atom.normal / atom.support);
    masses_.push_back(atom.mass);
    min_h = std::min(min_h, atom.support);
  }
  r_max_ = 2.0 * phi_.c_phi() * std::sqrt(static_cast<double>(dim_)) / min_h;
}

double PolarStar::G(const Vec& x) const {
  CompensatedSum s;
  for (std::size_t i = 0; i < masses_.size(); ++i) s.add(phi_(x.dot(scaled_normals_[i])) * masses_[i]);
  return s.value();
}

double PolarStar::radial(const Vec& v) const {
  std::vector<double> a(masses_.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = v.dot(scaled_normals_[i]);
  auto g = [&](double r) {
    CompensatedSum s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add(phi_(r * a[i]) * masses_[i]);
    return s.value();
  };
  double hi = r_max_;
  for (int i = 0; g(hi) <= 1.0; ++i) {
    if (i >= kMaxDoublings) throw Error(ErrorCode::UnboundedDirection, "G stays below 1 along v");
    hi *= 2.0;
  }
  return bisect_level(g, 0.0, hi);
}

Membership polar_membership(const Polytope& k, const Phi& phi, const Vec& x) {
  const PolarStar star(k, phi);
  const double g = star.G(x);
  return {g <= 1.0 + 1e-12, g};
}

double polar_radial_orlicz(const Polytope& k, const Phi& phi, const Vec& v) {
  return PolarStar(k, phi).radial(v);
}

PolarVolume polar_volume_by_roots(const Polytope& k, const Phi& phi, const SphericalGrid& grid,
                                  kernels::Exec exec) {
  const PolarStar star(k, phi);
  return {volume_from_radial([&](const Vec& v) { return star.radial(v); }, grid, exec),
          grid.resolution};
}

PolarVolume polar_volume(const Polytope& k, const Phi& phi, const SphericalGrid& grid,
                         kernels::Exec exec) {
  if (!phi.is_power()) return polar_volume_by_roots(k, phi, grid, exec);
  const auto m = cone_volume_measure(k);
  std::vector<Vec> scaled;
  std::vector<double> masses;
  for (const auto& atom : m.atoms) {
    scaled.push_back(atom.normal / atom.support);
    masses.push_back(atom.mass);
  }
  std::vector<double> h(grid.size());
  kernels::lp_norm(scaled, masses, phi.exponent(), grid.directions, h, exec);
  for (auto& x : h) x = 1.0 / x;
  return {kernels::radial_volume(grid.dim, grid.weights, h), grid.resolution};
}

double volume_ratio(const Polytope& k, const Phi& phi, const SphericalGrid& grid,
                    kernels::Exec exec) {
  return polar_volume(k, phi, grid, exec).value / k.volume();
}

double petty_product(const Polytope& k, const SphericalGrid& grid, kernels::Exec exec) {
  std::vector<Vec> normals;
  std::vector<double> weights;
  for (const auto& f : k.facets()) {
    normals.push_back(f.normal);
    weights.push_back(0.5 * f.area);
  }
  std::vector<double> h(grid.size());
  kernels::zonoid_support(normals, weights, grid.directions, h, exec);
  for (auto& x : h) x = 1.0 / x;
  const double polar = kernels::radial_volume(grid.dim, grid.weights, h);
  return polar * std::pow(k.volume(), k.dim() - 1);
}

Polytope linfty_polar(const Polytope& k) {
  k.require_origin_interior();
  // K n (-K) = {x : |x.u_i| <= h_i} is the polar of conv{+-u_i/h_i}.
  std::vector<Vec> dual;
  for (const auto& f : k.facets()) {
    dual.push_back(f.normal / f.support);
    dual.push_back(-f.normal / f.support);
  }
  const auto p = Polytope::hull(k.dim(), dual);
  std::vector<Vec> verts;
  for (const auto& f : p.facets()) verts.push_back(f.normal / f.support);
  return Polytope::hull(k.dim(), verts);
}

double convexity_deficit(const Phi& phi, double a, double b, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated, "convexity_deficit needs alpha, beta > 0");
  }
  return alpha * phi(a / alpha) + beta * phi(b / beta) -
         (alpha + beta) * phi((a + b) / (alpha + beta));
}

GapCheck lemma_phiaround0_gap(const Phi& phi, double a, double b, double alpha, double beta,
                              double omega) {
  if (!(a * b < 0.0) || !(alpha > 0.0) || !(beta > 0.0) || !(omega > 0.0) ||
      !(std::abs(a) / alpha >= omega) || !(std::abs(b) / beta >= omega)) {
    throw Error(ErrorCode::PreconditionViolated,
                "need a*b < 0, alpha, beta, omega > 0 and |a|/alpha, |b|/beta >= omega");
  }
  const double deficit = convexity_deficit(phi, a, b, alpha, beta);
  const double bound = std::min(std::abs(a), std::abs(b)) / omega * (phi(-omega) + phi(omega));
  return {deficit, bound};
}

GapCheck lemma_phip_gap(const Phi& phi, double a, double b, double alpha, double beta,
                        double omega) {
  if (!phi.is_even()) throw Error(ErrorCode::PreconditionViolated, "phi must be even");
  if (!(a > 0.0) || !(b > 0.0) || !(alpha > 0.0) || !(beta > 0.0) || !(omega > 0.0)) {
    throw Error(ErrorCode::PreconditionViolated, "need a, b, alpha, beta, omega > 0");
  }
  const double x = a / alpha;
  const double y = b / beta;
  if (!(omega <= x && x <= 1.0 / omega && omega <= y && y <= 1.0 / omega)) {
    throw Error(ErrorCode::PreconditionViolated, "a/alpha and b/beta must lie in [omega, 1/omega]");
  }
  const double curvature = phi.min_second_derivative(omega, 1.0 / omega);
  if (!(curvature > 0.0)) throw Error(ErrorCode::PreconditionViolated, "phi'' must be positive");
  const double deficit = convexity_deficit(phi, a, b, alpha, beta);
  const double d = x - y;
  const double bound =
      curvature * std::min(alpha * alpha, beta * beta) / (2.0 * (alpha + beta)) * d * d;
  return {deficit, bound};
}

}  // namespace pettylab::orlicz
