#pragma once

#include "pettylab/geometry/types.hpp"

#include <vector>

namespace pettylab {

/// Default number of profile samples.
inline constexpr int kDefaultProfileSamples = 2001;

/// Body of revolution around the line R*axis: the points y + t*axis with
/// y orthogonal to the axis, |y| <= r(t), t in [heights.front(), heights.back()].
/// The radius profile is the piecewise-linear interpolant of the samples and
/// must be concave. Height samples are centered: heights.front() == -heights.back().
class RevolutionBody {
 public:
  static RevolutionBody from_profile(int dim, const Vec& axis, std::vector<double> heights,
                                     std::vector<double> radii);

  /// Coaxial ellipsoid with equatorial semi-axis `equator` and polar semi-axis
  /// `polar`. Samples are uniform in the parametric angle.
  static RevolutionBody ellipsoid(int dim, const Vec& axis, double equator, double polar,
                                  int samples = kDefaultProfileSamples);
  static RevolutionBody ball(int dim, const Vec& axis, int samples = kDefaultProfileSamples) {
    return ellipsoid(dim, axis, 1.0, 1.0, samples);
  }
  /// Cylinder of radius `radius` over [-half_height, half_height].
  static RevolutionBody cylinder(int dim, const Vec& axis, double radius, double half_height,
                                 int samples = kDefaultProfileSamples);
  /// conv(B^n, +-(1+eps) axis).
  static RevolutionBody cap_ball(int dim, const Vec& axis, double eps,
                                 int samples = kDefaultProfileSamples);

  int dim() const { return dim_; }
  const Vec& axis() const { return axis_; }
  const std::vector<double>& heights() const { return heights_; }
  const std::vector<double>& radii() const { return radii_; }
  double half_height() const { return heights_.back(); }
  /// Interpolated profile radius; zero outside the height range.
  double radius_at(double t) const;
  double equator_radius() const { return radius_at(0.0); }
  /// r(-t) == r(t) on every sampled pair.
  bool is_symmetric(double tol = 1e-9) const;

  double support(const Vec& x) const;
  double radial(const Vec& v) const;
  double polar_radial(const Vec& v) const;
  /// kappa_{n-1} * int r(t)^{n-1} dt by the trapezoid rule on the samples.
  double volume() const;

  /// Axial and orthogonal components (s, c) of x, c >= 0.
  std::pair<double, double> split(const Vec& x) const;
  /// Radial function of the profile region in the (t, r) half-plane for the
  /// unit direction (cos angle, sin angle), angle measured from the axis.
  double radial_at_angle(double angle) const;

 private:
  RevolutionBody() = default;

  int dim_ = 0;
  Vec axis_ = Vec::UnitZ();
  std::vector<double> heights_;
  std::vector<double> radii_;
};

}  // namespace pettylab
