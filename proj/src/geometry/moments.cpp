#include "pettylab/geometry/moments.hpp"

#include "pettylab/error.hpp"

namespace pettylab {

namespace {

// Calls fn(volume, vertices...) for every simplex of a fan decomposition from c.
template <class Fn>
void for_each_simplex(const Polytope& k, const Vec& c, Fn&& fn) {
  const auto& verts = k.vertices();
  for (const auto& f : k.facets()) {
    if (k.dim() == 2) {
      const Vec a = verts[f.cycle[0]];
      const Vec b = verts[f.cycle[1]];
      const Vec da = a - c;
      const Vec db = b - c;
      fn(0.5 * (da.x() * db.y() - da.y() * db.x()), std::array<Vec, 3>{c, a, b});
    } else {
      const Vec p0 = verts[f.cycle[0]];
      for (std::size_t i = 1; i + 1 < f.cycle.size(); ++i) {
        const Vec p1 = verts[f.cycle[i]];
        const Vec p2 = verts[f.cycle[i + 1]];
        const double vol = (p0 - c).dot((p1 - c).cross(p2 - c)) / 6.0;
        fn(vol, std::array<Vec, 4>{c, p0, p1, p2});
      }
    }
  }
}

}  // namespace

MomentData moments(const Polytope& k) {
  const int n = k.dim();
  const Vec c0 = k.vertex_centroid();
  double vol = 0.0;
  Vec first = Vec::Zero();
  for_each_simplex(k, c0, [&](double v, const auto& s) {
    Vec sum = Vec::Zero();
    for (const auto& p : s) sum += p;
    vol += v;
    first += v * sum / static_cast<double>(s.size());
  });
  MomentData out;
  out.volume = vol;
  out.centroid = first / vol;
  // Simplex second moment about the origin with vertices p_i:
  //   vol / ((n+1)(n+2)) * (sum p_i p_i^T + (sum p_i)(sum p_i)^T).
  Mat m = Mat::Zero();
  for_each_simplex(k, c0, [&](double v, const auto& s) {
    Mat outer = Mat::Zero();
    Vec sum = Vec::Zero();
    for (const auto& p : s) {
      const Vec q = p - out.centroid;
      outer += q * q.transpose();
      sum += q;
    }
    m += v / ((n + 1.0) * (n + 2.0)) * (outer + sum * sum.transpose());
  });
  if (n == 2) {
    m.row(2).setZero();
    m.col(2).setZero();
  }
  out.second_moment = m;
  return out;
}

IsotropicResult make_isotropic(const Polytope& k) {
  const int n = k.dim();
  const MomentData md = moments(k);
  const Eigen::MatrixXd block = md.second_moment.topLeftCorner(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(block);
  const auto& ev = eig.eigenvalues();
  if (!(ev.minCoeff() > 0.0) || ev.maxCoeff() / ev.minCoeff() > 1e12) {
    throw Error(ErrorCode::SingularMoments, "moment matrix is numerically singular");
  }
  // A = s * M^{-1/2}: volume of A K is s^n det(M)^{-1/2} V, set to one.
  const Eigen::MatrixXd inv_sqrt =
      eig.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
  const double det_inv_sqrt = ev.cwiseSqrt().cwiseInverse().prod();
  const double s = std::pow(1.0 / (md.volume * det_inv_sqrt), 1.0 / n);
  Mat a = embed(s * inv_sqrt);
  if (n == 2) a(2, 2) = 0.0;
  Polytope body = k.translated(-md.centroid).transformed(a);
  MomentData out = moments(body);
  out.isotropic_constant = out.second_moment.topLeftCorner(n, n).trace() / n;
  return {std::move(body), out, a};
}

MomentCheck ellipsoid_moment_check(std::span<const double> semi_axes, const Vec& w) {
  const int n = static_cast<int>(semi_axes.size());
  if (n != 2 && n != 3) throw Error(ErrorCode::PreconditionViolated, "dimension must be 2 or 3");
  double det = 1.0;
  double h2 = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(semi_axes[i] > 0.0)) throw Error(ErrorCode::PreconditionViolated, "semi-axes must be positive");
    det *= semi_axes[i];
    h2 += semi_axes[i] * semi_axes[i] * w[i] * w[i];
  }
  MomentCheck out;
  // E = diag(a) B^n: int_E (w.x)^2 dx = det(a) * |diag(a) w|^2 * int_B x_1^2 dx.
  out.lhs = det * h2 * kappa(n) / (n + 2);
  const double volume = det * kappa(n);
  out.rhs = h2 * volume * std::pow(kappa(n), 2.0 / n) * ball_isotropic_constant(n);
  return out;
}

}  // namespace pettylab
