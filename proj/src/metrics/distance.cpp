#include "pettylab/error.hpp"
#include "pettylab/geometry/moments.hpp"
#include "pettylab/metrics/metrics.hpp"
#include "pettylab/symmetrize/symmetrize.hpp"

#include <algorithm>
#include <cmath>

namespace pettylab::metrics {

namespace {

constexpr double kLogAspectRange = 3.0;
constexpr int kSeeds = 64;
constexpr int kScanAngles = 1024;
constexpr int kVerifyAngles = 512;
constexpr double kGoldenTolerance = 1e-9;
constexpr double kVerifyTolerance = 1e-6;

// Radial function of the coaxial ellipsoid with equator 1 and polar semi-axis e^q.
double ellipse_radial(double q, double angle) {
  const double c = std::cos(angle) * std::exp(-q);
  const double s = std::sin(angle);
  return 1.0 / std::sqrt(c * c + s * s);
}

struct Spread {
  double lo;
  double hi;
  double log_ratio() const { return std::log(hi / lo); }
};

Spread spread(double q, const std::vector<double>& angles, const std::vector<double>& rho) {
  Spread s{1e300, -1e300};
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double f = rho[i] / ellipse_radial(q, angles[i]);
    s.lo = std::min(s.lo, f);
    s.hi = std::max(s.hi, f);
  }
  return s;
}

DistanceReport coaxial_scan(const RevolutionBody& k) {
  if (!k.is_symmetric()) throw Error(ErrorCode::DegenerateBody, "body of revolution is not o-symmetric");
  const RevolutionBody n = sym::spin_normalize(k);  // throws DegenerateBody on r(0) = 0

  std::vector<double> angles;
  for (int i = 0; i <= kScanAngles; ++i) angles.push_back(0.5 * kPi * i / kScanAngles);
  for (int i = 0; i < kVerifyAngles; ++i) angles.push_back(0.5 * kPi * (i + 0.5) / kVerifyAngles);
  for (std::size_t i = 0; i < n.heights().size(); ++i) {
    if (n.heights()[i] >= 0.0) angles.push_back(std::atan2(n.radii()[i], n.heights()[i]));
  }
  std::vector<double> rho(angles.size());
  for (std::size_t i = 0; i < angles.size(); ++i) rho[i] = n.radial_at_angle(angles[i]);

  auto objective = [&](double q) { return spread(q, angles, rho).log_ratio(); };
  int best = 0;
  double best_value = 1e300;
  const double step = 2.0 * kLogAspectRange / (kSeeds - 1);
  for (int i = 0; i < kSeeds; ++i) {
    const double val = objective(-kLogAspectRange + step * i);
    if (val < best_value) {
      best_value = val;
      best = i;
    }
  }
  double a = -kLogAspectRange + step * std::max(0, best - 1);
  double b = -kLogAspectRange + step * std::min(kSeeds - 1, best + 1);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = objective(c), fd = objective(d);
  while (b - a > kGoldenTolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = objective(d);
    }
  }
  double q = 0.5 * (a + b);
  if (objective(-kLogAspectRange + step * best) < objective(q)) q = -kLogAspectRange + step * best;
  const Spread s = spread(q, angles, rho);

  DistanceReport r;
  r.value = s.log_ratio();
  r.witness_outer_scale = std::exp(r.value);
  r.method = DistanceMethod::coaxial_scan;
  // Back to the original scaling: equator r(0), polar half-height.
  const double equator = s.lo * k.radius_at(0.0);
  const double polar = s.lo * std::exp(q) * k.half_height();
  const auto basis = orthogonal_basis(k.dim(), k.axis());
  for (const auto& e : basis) {
    r.witness_inner.semi_axes.push_back(equator);
    r.witness_inner.directions.push_back(e);
  }
  r.witness_inner.semi_axes.push_back(polar);
  r.witness_inner.directions.push_back(k.axis());

  // Certify E in K in lambda E on the verification directions of the original body.
  double worst = -1e300;
  for (int i = 0; i < kVerifyAngles; ++i) {
    const double angle = 0.5 * kPi * (i + 0.5) / kVerifyAngles;
    const double rk = k.radial_at_angle(std::atan2(std::sin(angle) * k.radius_at(0.0),
                                                   std::cos(angle) * k.half_height()));
    const double cs = std::cos(angle) * k.half_height();
    const double sn = std::sin(angle) * k.radius_at(0.0);
    const double len = std::hypot(cs, sn);
    const double ct = cs / len, st = sn / len;
    const double re = 1.0 / std::sqrt(ct * ct / (polar * polar) + st * st / (equator * equator));
    worst = std::max(worst, re / rk - 1.0);
    worst = std::max(worst, rk / (r.witness_outer_scale * re) - 1.0);
  }
  r.verification_error = worst;
  if (worst > kVerifyTolerance) {
    throw Error(ErrorCode::DegenerateBody, "coaxial witness failed verification");
  }
  return r;
}

}  // namespace

std::string to_string(DistanceMethod m) {
  return m == DistanceMethod::coaxial_scan ? "coaxial_scan" : "radial_ratio";
}

nlohmann::json to_json(const DistanceReport& r) {
  nlohmann::json dirs = nlohmann::json::array();
  for (const auto& d : r.witness_inner.directions) dirs.push_back({d.x(), d.y(), d.z()});
  const Vec& c = r.witness_inner.center;
  return {{"value", r.value},
          {"witness_inner",
           {{"center", {c.x(), c.y(), c.z()}},
            {"semi_axes", r.witness_inner.semi_axes},
            {"directions", dirs}}},
          {"witness_outer_scale", r.witness_outer_scale},
          {"method", to_string(r.method)},
          {"verification_error", r.verification_error}};
}

DistanceReport bm_distance_to_ball_axial(const RevolutionBody& k) { return coaxial_scan(k); }

DistanceReport el_deviation_axial(const RevolutionBody& k) {
  DistanceReport r = coaxial_scan(k);
  if (r.value > 1.0) {
    r.value = 1.0;
    r.witness_outer_scale = std::exp(1.0);
  }
  return r;
}

DistanceReport bm_upper_bound_isotropic(const Polytope& k) {
  const auto iso = make_isotropic(k);
  double outer = 0.0;
  for (const auto& v : iso.body.vertices()) outer = std::max(outer, v.norm());
  double inner = 1e300;
  for (const auto& f : iso.body.facets()) inner = std::min(inner, f.support);
  DistanceReport r;
  r.method = DistanceMethod::radial_ratio;
  r.value = std::log(outer / inner);
  r.witness_outer_scale = outer / inner;
  // E = centroid + A^{-1}(inner B): semi-axes from the SVD of A^{-1}.
  const int n = k.dim();
  const Eigen::MatrixXd inv = iso.map.topLeftCorner(n, n).inverse();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(inv, Eigen::ComputeFullU);
  r.witness_inner.center = moments(k).centroid;
  for (int j = 0; j < n; ++j) {
    Vec d = Vec::Zero();
    d.head(n) = svd.matrixU().col(j);
    r.witness_inner.directions.push_back(d);
    r.witness_inner.semi_axes.push_back(inner * svd.singularValues()(j));
  }
  return r;
}

InclusionReport star_inclusion(const RadialOracle& rho_a, const RadialOracle& rho_b,
                               const SphericalGrid& grid, double tol, kernels::Exec exec) {
  std::vector<double> diff(grid.size());
  kernels::map_indices(
      diff,
      [&](std::size_t j) {
        const double a = rho_a(grid.directions[j]);
        const double b = rho_b(grid.directions[j]);
        if (!(a > 0.0) || !(b > 0.0)) {
          throw Error(ErrorCode::NonpositiveRadial, "radial oracle must be positive");
        }
        return a - b;
      },
      exec);
  InclusionReport r;
  r.worst_violation = -1e300;
  for (std::size_t j = 0; j < diff.size(); ++j) {
    if (diff[j] > r.worst_violation) {
      r.worst_violation = diff[j];
      r.worst_direction = grid.directions[j];
    }
  }
  r.holds = r.worst_violation <= tol;
  return r;
}

}  // namespace pettylab::metrics
