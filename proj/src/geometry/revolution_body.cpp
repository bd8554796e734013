#include "pettylab/geometry/revolution_body.hpp"

#include "pettylab/error.hpp"

#include <algorithm>
#include <limits>

namespace pettylab {

namespace {

constexpr double kConcavityTolerance = 1e-9;

}  // namespace

RevolutionBody RevolutionBody::from_profile(int dim, const Vec& axis, std::vector<double> heights,
                                            std::vector<double> radii) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::InvalidSpec, "dimension must be 2 or 3");
  if (heights.size() != radii.size() || heights.size() < 2) {
    throw Error(ErrorCode::InvalidSpec, "profile needs matching height/radius samples");
  }
  Vec u = axis;
  if (dim == 2) u.z() = 0.0;
  if (u.norm() == 0.0) throw Error(ErrorCode::InvalidSpec, "axis must be nonzero");
  u.normalize();
  for (std::size_t i = 1; i < heights.size(); ++i) {
    if (!(heights[i] > heights[i - 1])) {
      throw Error(ErrorCode::InvalidSpec, "profile heights must be strictly increasing");
    }
  }
  const double h = heights.back();
  if (!(h > 0.0) || std::abs(heights.front() + h) > 1e-9 * h) {
    throw Error(ErrorCode::InvalidSpec, "profile heights must span [-h, h]");
  }
  double rmax = 0.0;
  for (double r : radii) {
    if (r < 0.0) throw Error(ErrorCode::InvalidSpec, "profile radii must be nonnegative");
    rmax = std::max(rmax, r);
  }
  for (std::size_t i = 1; i + 1 < heights.size(); ++i) {
    const double s0 = (radii[i] - radii[i - 1]) / (heights[i] - heights[i - 1]);
    const double s1 = (radii[i + 1] - radii[i]) / (heights[i + 1] - heights[i]);
    if (s1 - s0 > kConcavityTolerance * std::max(1.0, rmax / h)) {
      throw Error(ErrorCode::InvalidSpec, "profile is not concave");
    }
  }
  RevolutionBody body;
  body.dim_ = dim;
  body.axis_ = u;
  body.heights_ = std::move(heights);
  body.radii_ = std::move(radii);
  return body;
}

RevolutionBody RevolutionBody::ellipsoid(int dim, const Vec& axis, double equator, double polar,
                                         int samples) {
  if (!(equator > 0.0) || !(polar > 0.0) || samples < 3) {
    throw Error(ErrorCode::InvalidSpec, "ellipsoid needs positive semi-axes");
  }
  std::vector<double> t(samples);
  std::vector<double> r(samples);
  for (int i = 0; i < samples; ++i) {
    const double angle = kPi * static_cast<double>(samples - 1 - i) / (samples - 1);
    t[i] = polar * std::cos(angle);
    r[i] = equator * std::sin(angle);
  }
  t.front() = -polar;
  t.back() = polar;
  r.front() = 0.0;
  r.back() = 0.0;
  if (samples % 2 == 1) t[samples / 2] = 0.0;
  return from_profile(dim, axis, std::move(t), std::move(r));
}

RevolutionBody RevolutionBody::cylinder(int dim, const Vec& axis, double radius,
                                        double half_height, int samples) {
  std::vector<double> t(samples);
  std::vector<double> r(samples, radius);
  for (int i = 0; i < samples; ++i) {
    t[i] = -half_height + 2.0 * half_height * i / (samples - 1);
  }
  t.back() = half_height;
  return from_profile(dim, axis, std::move(t), std::move(r));
}

RevolutionBody RevolutionBody::cap_ball(int dim, const Vec& axis, double eps, int samples) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidSpec, "cap_ball needs eps > 0");
  const double apex = 1.0 + eps;
  const double t0 = 1.0 / apex;  // height of the tangency circle
  const double r0 = std::sqrt(1.0 - t0 * t0);
  // Angle-uniform samples on the spherical zone, then the straight cone flanks.
  const int zone = std::max(3, samples - 2);
  const double a0 = std::acos(t0);
  std::vector<double> t;
  std::vector<double> r;
  t.push_back(-apex);
  r.push_back(0.0);
  for (int i = 0; i < zone; ++i) {
    const double angle = kPi - a0 - (kPi - 2.0 * a0) * i / (zone - 1);
    t.push_back(std::cos(angle));
    r.push_back(std::sin(angle));
  }
  t[1] = -t0;
  r[1] = r0;
  t[zone] = t0;
  r[zone] = r0;
  t.push_back(apex);
  r.push_back(0.0);
  return from_profile(dim, axis, std::move(t), std::move(r));
}

double RevolutionBody::radius_at(double t) const {
  if (t < heights_.front() || t > heights_.back()) return 0.0;
  auto it = std::upper_bound(heights_.begin(), heights_.end(), t);
  if (it == heights_.end()) return radii_.back();
  const std::size_t i = static_cast<std::size_t>(it - heights_.begin());
  if (i == 0) return radii_.front();
  const double w = (t - heights_[i - 1]) / (heights_[i] - heights_[i - 1]);
  return radii_[i - 1] + w * (radii_[i] - radii_[i - 1]);
}

bool RevolutionBody::is_symmetric(double tol) const {
  const std::size_t m = heights_.size();
  const double scale = std::max(heights_.back(), *std::max_element(radii_.begin(), radii_.end()));
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(heights_[i] + heights_[m - 1 - i]) > tol * scale) return false;
    if (std::abs(radii_[i] - radii_[m - 1 - i]) > tol * scale) return false;
  }
  return true;
}

std::pair<double, double> RevolutionBody::split(const Vec& x) const {
  const double s = x.dot(axis_);
  const double c = (x - s * axis_).norm();
  return {s, c};
}

double RevolutionBody::support(const Vec& x) const {
  const auto [s, c] = split(x);
  double h = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    h = std::max(h, heights_[i] * s + radii_[i] * c);
  }
  return h;
}

double RevolutionBody::radial_at_angle(double angle) const {
  const double s = std::cos(angle);
  const double c = std::sin(angle);
  // Find the first profile edge crossed by the ray (s, c) in the (t, r) plane.
  // The region {|t| <= h, 0 <= r <= r(t)} is convex and contains a
  // neighbourhood of the origin relative to the half-plane r >= 0.
  const double h = heights_.back();
  if (c <= 0.0) return s >= 0.0 ? h : -heights_.front();
  double best = std::numeric_limits<double>::infinity();
  // End caps t = +-h.
  if (s > 0.0) {
    const double rho = h / s;
    if (rho * c <= radii_.back() * (1.0 + 1e-15)) best = rho;
  } else if (s < 0.0) {
    const double rho = heights_.front() / s;
    if (rho * c <= radii_.front() * (1.0 + 1e-15)) best = rho;
  }
  for (std::size_t i = 0; i + 1 < heights_.size(); ++i) {
    const double t0 = heights_[i];
    const double t1 = heights_[i + 1];
    const double r0 = radii_[i];
    const double r1 = radii_[i + 1];
    // Solve rho*(s, c) = (t0, r0) + w*(t1 - t0, r1 - r0), w in [0, 1].
    const double dt = t1 - t0;
    const double dr = r1 - r0;
    const double det = s * dr - c * dt;
    if (det == 0.0) continue;
    const double w = (c * t0 - s * r0) / det;
    if (w < -1e-12 || w > 1.0 + 1e-12) continue;
    const double rho = (t0 * dr - r0 * dt) / det;
    if (rho > 0.0) best = std::min(best, rho);
  }
  return best;
}

double RevolutionBody::radial(const Vec& v) const {
  if (!(radius_at(0.0) > 0.0)) {
    throw Error(ErrorCode::OriginNotInterior, "origin is not interior to the body of revolution");
  }
  const auto [s, c] = split(v);
  const double norm = std::hypot(s, c);
  return radial_at_angle(std::atan2(c, s)) / norm;
}

double RevolutionBody::polar_radial(const Vec& v) const {
  if (!(radius_at(0.0) > 0.0)) {
    throw Error(ErrorCode::OriginNotInterior, "origin is not interior to the body of revolution");
  }
  return 1.0 / support(v);
}

double RevolutionBody::volume() const {
  CompensatedSum sum;
  const int p = dim_ - 1;
  for (std::size_t i = 0; i + 1 < heights_.size(); ++i) {
    const double dt = heights_[i + 1] - heights_[i];
    sum.add(0.5 * dt * (std::pow(radii_[i], p) + std::pow(radii_[i + 1], p)));
  }
  return kappa(dim_ - 1) * sum.value();
}

}  // namespace pettylab
