#pragma once

#include "pettylab/geometry/types.hpp"

#include <vector>

namespace pettylab {

/// Equal-weight quadrature rule on S^{n-1}: uniform angles on the circle,
/// a Fibonacci lattice on S^2. Weights sum to the measure of the sphere.
struct SphericalGrid {
  int dim = 0;
  int resolution = 0;
  std::vector<Vec> directions;
  std::vector<double> weights;

  std::size_t size() const { return directions.size(); }
};

/// Deterministic grid; resolution >= 16.
SphericalGrid spherical_grid(int dim, int resolution);

/// Quadrature of (v . e)^2; the exact value is |S^{n-1}|/n for unit e.
double grid_second_moment(const SphericalGrid& grid, const Vec& e);

}  // namespace pettylab
