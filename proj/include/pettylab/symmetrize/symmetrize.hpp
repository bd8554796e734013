#pragma once

#include "pettylab/geometry/body.hpp"
#include "pettylab/kernels/kernels.hpp"

namespace pettylab::sym {

/// Exact Steiner symmetral of a polygon with respect to the line orthogonal to `v`.
Polytope steiner_2d(const Polytope& k, const Vec& v);

/// Drops polygon vertices whose removal loses less than rel_area * area; keeps
/// repeated symmetrization from doubling the vertex count at every step.
Polytope prune_polygon(const Polytope& k, double rel_area = 1e-10);

inline constexpr int kDefaultSteinerGrid = 100;

/// Inner approximation of the Steiner symmetral of a 3-polytope: chords over a
/// grid_res x grid_res node grid on the bounding box of the projection, centered
/// and hulled. The volume deficit vanishes as grid_res grows.
Polytope steiner_3d(const Polytope& k, const Vec& v, int grid_res = kDefaultSteinerGrid,
                    kernels::Exec exec = kernels::Exec::parallel);

inline constexpr int kDefaultSlices = 2001;

/// Schwarz rounding around R v by slice measures: every hyperplane x.v = t meets
/// K and the result in sets of equal (n-1)-measure. Heights are measured from
/// the midpoint of the support interval [-h_K(-v), h_K(v)] (see schwarz_offset).
RevolutionBody schwarz_round(const Polytope& k, const Vec& v, int slices = kDefaultSlices,
                             kernels::Exec exec = kernels::Exec::parallel);
RevolutionBody schwarz_round(const RevolutionBody& k, const Vec& v, int slices = kDefaultSlices,
                             kernels::Exec exec = kernels::Exec::parallel);

/// Midpoint of the support interval of `k` along unit `v`; zero for o-symmetric bodies.
double schwarz_offset(const Body& k, const Vec& v);

/// (n-1)-measure of the section {x in K : x.v = t}.
double section_measure(const Polytope& k, const Vec& v, double t);

/// Rescales an o-symmetric body of revolution so that its equator has radius 1
/// and its poles are +-axis.
RevolutionBody spin_normalize(const RevolutionBody& k);

/// Polytope for a body of revolution: exact in the plane, `ring_samples`-gons
/// on every profile circle in space.
Polytope to_polytope(const RevolutionBody& k, int ring_samples = 256);

}  // namespace pettylab::sym
