#pragma once

#include "pettylab/geometry/polytope.hpp"

#include <span>
#include <utility>

namespace pettylab {

struct MomentData {
  Vec centroid = Vec::Zero();
  /// M_jk = int_K (x - c)_j (x - c)_k dx; only the top-left n x n block is used.
  Mat second_moment = Mat::Zero();
  double volume = 0.0;
  /// L with M = L * I, set by make_isotropic.
  double isotropic_constant = 0.0;
};

/// Exact centroid and second moments by a fan of simplices.
MomentData moments(const Polytope& k);

struct IsotropicResult {
  Polytope body;
  MomentData moments;
  Mat map;  // body = map * (K - centroid)
};

/// Affine image in isotropic position: volume 1, centroid o, moments L * I.
IsotropicResult make_isotropic(const Polytope& k);

struct MomentCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Second moment of the ellipsoid with the given semi-axes (coordinate axes)
/// in direction w, against h_E(w)^2 * V(E) * kappa_n^{2/n} * L_{B^n}.
MomentCheck ellipsoid_moment_check(std::span<const double> semi_axes, const Vec& w);

}  // namespace pettylab
