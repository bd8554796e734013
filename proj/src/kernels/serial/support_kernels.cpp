#include "pettylab/kernels/kernels.hpp"

#include <cmath>

namespace pettylab::kernels::serial {

void zonoid_support(std::span<const Vec> normals, std::span<const double> weights,
                    std::span<const Vec> dirs, std::span<double> out) {
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    const Vec& v = dirs[j];
    double h = 0.0;
    for (std::size_t i = 0; i < normals.size(); ++i) h += weights[i] * std::abs(v.dot(normals[i]));
    out[j] = h;
  }
}

void lp_norm(std::span<const Vec> scaled_normals, std::span<const double> masses, double p,
             std::span<const Vec> dirs, std::span<double> out) {
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    const Vec& v = dirs[j];
    double s = 0.0;
    for (std::size_t i = 0; i < scaled_normals.size(); ++i) {
      s += masses[i] * abs_power(v.dot(scaled_normals[i]), p);
    }
    out[j] = p == 1.0 ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 1.0 / p));
  }
}

}  // namespace pettylab::kernels::serial
