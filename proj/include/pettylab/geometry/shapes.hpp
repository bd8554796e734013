#pragma once

#include "pettylab/geometry/polytope.hpp"

#include <cstdint>
#include <random>

namespace pettylab {

/// Seeded generator with a platform-independent uniform draw (the standard
/// distributions are implementation-defined, which would break bit-identical output).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform unit vector in R^dim (xy-plane for dim 2).
  Vec unit_vector(int dim);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Regular polygon inscribed in the unit circle, starting at angle `phase`.
Polytope ball_polygon(int vertices, double phase = 0.0);
/// Hull of a Fibonacci point set on the unit sphere.
Polytope ball_polyhedron(int vertices);
/// Ball discretization in either dimension.
Polytope ball_polytope(int dim, int resolution);
/// Axis-aligned box with the given half-widths (centered at the origin).
Polytope box(int dim, const Vec& half_widths);
/// conv(ball discretization, +-(1+eps) axis).
Polytope cap_ball_polytope(int dim, const Vec& axis, double eps, int resolution);
/// Ellipsoid discretization: diag(semi_axes) applied to the ball polytope.
Polytope ellipsoid_polytope(int dim, const Vec& semi_axes, int resolution);
/// Random polygon/polytope: hull of `count` points; o-symmetric when `symmetric`.
/// The origin is always interior.
Polytope random_polytope(int dim, int count, bool symmetric, Rng& rng);
/// Random invertible linear map with condition number bounded by ~`max_cond`.
Mat random_linear_map(int dim, Rng& rng, double max_cond = 4.0);

}  // namespace pettylab
