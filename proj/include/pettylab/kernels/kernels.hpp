#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp with the same
// signature; outputs are per-index and independent, so both produce
// bit-identical results. Reductions are always serial and compensated.

#include "pettylab/geometry/types.hpp"

#include <cmath>
#include <cstddef>
#include <exception>
#include <span>

namespace pettylab::kernels {

enum class Exec { serial, parallel };

/// |x|^p with exact shortcuts for p = 1, 2, 4 (shared by both kernel variants).
inline double abs_power(double x, double p) {
  const double a = x < 0.0 ? -x : x;
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  if (p == 4.0) return (a * a) * (a * a);
  return std::pow(a, p);
}

namespace serial {
/// out_j = sum_i weights_i * |dirs_j . normals_i|
void zonoid_support(std::span<const Vec> normals, std::span<const double> weights,
                    std::span<const Vec> dirs, std::span<double> out);
/// out_j = (sum_i masses_i * |dirs_j . scaled_normals_i|^p)^{1/p}
void lp_norm(std::span<const Vec> scaled_normals, std::span<const double> masses, double p,
             std::span<const Vec> dirs, std::span<double> out);
}  // namespace serial

namespace omp {
void zonoid_support(std::span<const Vec> normals, std::span<const double> weights,
                    std::span<const Vec> dirs, std::span<double> out);
void lp_norm(std::span<const Vec> scaled_normals, std::span<const double> masses, double p,
             std::span<const Vec> dirs, std::span<double> out);
}  // namespace omp

inline void zonoid_support(std::span<const Vec> normals, std::span<const double> weights,
                           std::span<const Vec> dirs, std::span<double> out, Exec exec) {
  exec == Exec::parallel ? omp::zonoid_support(normals, weights, dirs, out)
                         : serial::zonoid_support(normals, weights, dirs, out);
}

inline void lp_norm(std::span<const Vec> scaled_normals, std::span<const double> masses, double p,
                    std::span<const Vec> dirs, std::span<double> out, Exec exec) {
  exec == Exec::parallel ? omp::lp_norm(scaled_normals, masses, p, dirs, out)
                         : serial::lp_norm(scaled_normals, masses, p, dirs, out);
}

/// out_i = fn(i) for i in [0, out.size()). An exception thrown by fn is
/// rethrown after the loop (the one from the lowest index in parallel mode).
template <class Fn>
void map_indices(std::span<double> out, Fn&& fn, Exec exec) {
  const auto n = static_cast<std::ptrdiff_t>(out.size());
  if (exec == Exec::parallel) {
    std::exception_ptr error;
    std::ptrdiff_t error_index = n;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        out[i] = fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(pettylab_map_indices)
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = fn(static_cast<std::size_t>(i));
  }
}

/// sum_j weights_j * rho_j^dim / dim, compensated, in index order.
double radial_volume(int dim, std::span<const double> weights, std::span<const double> rho);

}  // namespace pettylab::kernels
