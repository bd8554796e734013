#include "pettylab/geometry/types.hpp"

namespace pettylab {

std::vector<Vec> orthogonal_basis(int dim, const Vec& u) {
  if (dim == 2) return {Vec(-u.y(), u.x(), 0.0)};
  Vec a = std::abs(u.x()) < 0.9 ? Vec::UnitX() : Vec::UnitY();
  Vec e1 = (a - a.dot(u) * u).normalized();
  Vec e2 = u.cross(e1);
  return {e1, e2};
}

Mat embed(const Eigen::MatrixXd& a) {
  Mat m = Mat::Identity();
  m.topLeftCorner(a.rows(), a.cols()) = a;
  return m;
}

double compensated_sum(std::span<const double> values) {
  CompensatedSum s;
  for (double v : values) s.add(v);
  return s.value();
}

}  // namespace pettylab
