#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace pettylab {

// Bodies live in R^2 or R^3. Planar data uses the xy-plane with z = 0 so that
// both dimensions share one fixed-size vector type.
using Vec = Eigen::Vector3d;
using Mat = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;

/// Volume of the unit ball in R^n (n = 0..3).
constexpr double kappa(int n) {
  switch (n) {
    case 0: return 1.0;
    case 1: return 2.0;
    case 2: return kPi;
    case 3: return 4.0 * kPi / 3.0;
    default: return 0.0;
  }
}

/// (n-1)-measure of the unit sphere S^{n-1}.
constexpr double sphere_measure(int n) { return n * kappa(n); }

/// Isotropic constant of the ball: kappa_n^{-2/n} / (n+2).
inline double ball_isotropic_constant(int n) {
  return std::pow(kappa(n), -2.0 / n) / (n + 2);
}

/// Petty bound (kappa_n / kappa_{n-1})^n.
inline double petty_bound(int n) { return std::pow(kappa(n) / kappa(n - 1), n); }

/// Unit vector in the plane at angle theta.
inline Vec planar(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }

/// Orthonormal vectors spanning the complement of unit vector `u` inside R^dim.
std::vector<Vec> orthogonal_basis(int dim, const Vec& u);

/// Embeds a dim x dim matrix into the 3x3 carrier (identity on unused axes).
Mat embed(const Eigen::MatrixXd& a);

/// Neumaier-compensated sum over a range in fixed order.
double compensated_sum(std::span<const double> values);

class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace pettylab
