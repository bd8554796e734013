#include "pettylab/error.hpp"
#include "pettylab/kernels/kernels.hpp"

namespace pettylab::kernels {

double radial_volume(int dim, std::span<const double> weights, std::span<const double> rho) {
  CompensatedSum sum;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    if (!(rho[j] > 0.0)) throw Error(ErrorCode::NonpositiveRadial, "radial function must be positive");
    sum.add(weights[j] * std::pow(rho[j], dim));
  }
  return sum.value() / dim;
}

}  // namespace pettylab::kernels
