#pragma once

#include "pettylab/geometry/body.hpp"
#include "pettylab/orlicz/projection.hpp"

#include <json.hpp>

namespace pettylab::metrics {

enum class DistanceMethod { coaxial_scan, radial_ratio };

/// Ellipsoid center + sum_k s_k B(directions_k): semi-axes along orthonormal directions.
struct EllipsoidWitness {
  Vec center = Vec::Zero();
  std::vector<double> semi_axes;
  std::vector<Vec> directions;
};

/// value = ln(lambda) with E in K in lambda E (E shifted by its center).
/// For coaxial_scan the value is the minimum over coaxial ellipsoids, an upper
/// bound for the Banach-Mazur distance to the ball; radial_ratio is the sandwich
/// ratio of the isotropic image about its centroid, also an upper bound.
struct DistanceReport {
  double value = 0.0;
  EllipsoidWitness witness_inner;
  double witness_outer_scale = 1.0;
  DistanceMethod method = DistanceMethod::coaxial_scan;
  /// Largest relative violation of the sandwich on the verification directions (<= 0 when certified).
  double verification_error = 0.0;
};

nlohmann::json to_json(const DistanceReport& r);
std::string to_string(DistanceMethod m);

/// Coaxial scan for an o-symmetric body of revolution.
DistanceReport bm_distance_to_ball_axial(const RevolutionBody& k);
/// Same scan with o-centered ellipsoids, capped at 1.
DistanceReport el_deviation_axial(const RevolutionBody& k);
/// ln(max |vertex| / min facet distance) of the isotropic image.
DistanceReport bm_upper_bound_isotropic(const Polytope& k);

struct InclusionReport {
  bool holds = true;
  double worst_violation = 0.0;  // max_v rho_A(v) - rho_B(v)
  Vec worst_direction = Vec::Zero();
};

InclusionReport star_inclusion(const RadialOracle& rho_a, const RadialOracle& rho_b,
                               const SphericalGrid& grid, double tol,
                               kernels::Exec exec = kernels::Exec::parallel);

/// Membership functional of a convex star body: inside iff gauge(x) <= 1,
/// convex, gauge(o) = 0.
using MembershipFn = std::function<double(const Vec&)>;

/// Radial function of the Steiner symmetral in direction v of the convex body
/// {gauge <= 1}. Chords come from root finds on the gauge along lines parallel
/// to v; `base_points` samples per axis of v-perp check that the projection is
/// an interval (NonConvexStar otherwise). `reach` bounds the body's radial function.
RadialOracle steiner_symmetral_of_star(MembershipFn gauge, int dim, const Vec& v, double reach,
                                       int base_points = 129);
RadialOracle steiner_symmetral_of_star(const orlicz::PolarStar& star, const Vec& v,
                                       int base_points = 129);

}  // namespace pettylab::metrics
