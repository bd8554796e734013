#include "pettylab/geometry/shapes.hpp"

#include "pettylab/geometry/sphere_grid.hpp"

namespace pettylab {

Vec Rng::unit_vector(int dim) {
  while (true) {
    Vec v(uniform(-1, 1), uniform(-1, 1), dim == 3 ? uniform(-1, 1) : 0.0);
    const double r = v.norm();
    if (r > 1e-3 && r <= 1.0) return v / r;
  }
}

Polytope ball_polygon(int vertices, double phase) {
  std::vector<Vec> pts;
  pts.reserve(vertices);
  for (int k = 0; k < vertices; ++k) pts.push_back(planar(phase + 2.0 * kPi * k / vertices));
  return Polytope::hull(2, pts);
}

Polytope ball_polyhedron(int vertices) {
  const auto g = spherical_grid(3, vertices);
  return Polytope::hull(3, g.directions);
}

Polytope ball_polytope(int dim, int resolution) {
  return dim == 2 ? ball_polygon(resolution) : ball_polyhedron(resolution);
}

Polytope box(int dim, const Vec& half_widths) {
  std::vector<Vec> pts;
  const int corners = 1 << dim;
  for (int m = 0; m < corners; ++m) {
    Vec p = Vec::Zero();
    for (int i = 0; i < dim; ++i) p[i] = ((m >> i) & 1) ? half_widths[i] : -half_widths[i];
    pts.push_back(p);
  }
  return Polytope::hull(dim, pts);
}

Polytope cap_ball_polytope(int dim, const Vec& axis, double eps, int resolution) {
  std::vector<Vec> pts = ball_polytope(dim, resolution).vertices();
  Vec u = axis.normalized();
  pts.push_back((1.0 + eps) * u);
  pts.push_back(-(1.0 + eps) * u);
  return Polytope::hull(dim, pts);
}

Polytope ellipsoid_polytope(int dim, const Vec& semi_axes, int resolution) {
  Mat a = Mat::Identity();
  for (int i = 0; i < dim; ++i) a(i, i) = semi_axes[i];
  return ball_polytope(dim, resolution).transformed(a);
}

Polytope random_polytope(int dim, int count, bool symmetric, Rng& rng) {
  while (true) {
    std::vector<Vec> pts;
    for (int i = 0; i < count; ++i) {
      const Vec u = rng.unit_vector(dim);
      const double r = rng.uniform(0.4, 1.0);
      pts.push_back(r * u);
      if (symmetric) pts.push_back(-r * u);
    }
    Polytope p = Polytope::hull(dim, pts);
    if (p.contains_origin_interior(0.05)) return p;
  }
}

Mat random_linear_map(int dim, Rng& rng, double max_cond) {
  while (true) {
    Mat a = Mat::Identity();
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) a(i, j) = rng.uniform(-1.0, 1.0) + (i == j ? 1.5 : 0.0);
    }
    if (dim == 2) {
      a(2, 2) = 1.0;
      a(0, 2) = a(1, 2) = a(2, 0) = a(2, 1) = 0.0;
    }
    const Eigen::MatrixXd block = a.topLeftCorner(dim, dim);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(block);
    const Eigen::VectorXd s = svd.singularValues();
    const double smin = s(dim - 1);
    if (smin > 0.0 && s(0) / smin <= max_cond) return a;
  }
}

}  // namespace pettylab
