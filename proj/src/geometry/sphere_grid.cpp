#include "pettylab/geometry/sphere_grid.hpp"

#include "pettylab/error.hpp"

namespace pettylab {

SphericalGrid spherical_grid(int dim, int resolution) {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::InvalidSpec, "grid dimension must be 2 or 3");
  if (resolution < 16) throw Error(ErrorCode::InvalidSpec, "grid resolution must be >= 16");
  SphericalGrid g;
  g.dim = dim;
  g.resolution = resolution;
  g.directions.reserve(resolution);
  const double w = sphere_measure(dim) / resolution;
  g.weights.assign(resolution, w);
  if (dim == 2) {
    for (int k = 0; k < resolution; ++k) g.directions.push_back(planar(2.0 * kPi * k / resolution));
  } else {
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    for (int k = 0; k < resolution; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / resolution;
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      double frac = k / golden;
      frac -= std::floor(frac);
      const double phi = 2.0 * kPi * frac;
      g.directions.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
    }
  }
  return g;
}

double grid_second_moment(const SphericalGrid& grid, const Vec& e) {
  CompensatedSum s;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double c = grid.directions[j].dot(e);
    s.add(grid.weights[j] * c * c);
  }
  return s.value();
}

}  // namespace pettylab
