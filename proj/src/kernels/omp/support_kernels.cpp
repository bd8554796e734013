#include "pettylab/kernels/kernels.hpp"

#include <cmath>

namespace pettylab::kernels::omp {

void zonoid_support(std::span<const Vec> normals, std::span<const double> weights,
                    std::span<const Vec> dirs, std::span<double> out) {
  const auto m = static_cast<std::ptrdiff_t>(dirs.size());
  const std::size_t k = normals.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    const Vec& v = dirs[j];
    double h = 0.0;
    for (std::size_t i = 0; i < k; ++i) h += weights[i] * std::abs(v.dot(normals[i]));
    out[j] = h;
  }
}

void lp_norm(std::span<const Vec> scaled_normals, std::span<const double> masses, double p,
             std::span<const Vec> dirs, std::span<double> out) {
  const auto m = static_cast<std::ptrdiff_t>(dirs.size());
  const std::size_t k = scaled_normals.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    const Vec& v = dirs[j];
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += masses[i] * abs_power(v.dot(scaled_normals[i]), p);
    out[j] = p == 1.0 ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p));
  }
}

}  // namespace pettylab::kernels::omp
