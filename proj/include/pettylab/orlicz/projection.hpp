#pragma once

#include "pettylab/geometry/polytope.hpp"
#include "pettylab/geometry/sphere_grid.hpp"
#include "pettylab/kernels/kernels.hpp"
#include "pettylab/orlicz/phi.hpp"

#include <vector>

namespace pettylab::orlicz {

struct ConeAtom {
  Vec normal;
  double mass = 0.0;     // h_i a_i / (n V)
  double support = 0.0;  // h_i
  double area = 0.0;     // a_i
};

/// Cone volume probability measure of a polytope with the origin inside.
struct ConeVolumeMeasure {
  std::vector<ConeAtom> atoms;
  double total_mass = 0.0;
};

ConeVolumeMeasure cone_volume_measure(const Polytope& k);

/// (1/2) sum_i |x.u_i| a_i
double classical_projection_support(const Polytope& k, const Vec& x);
/// ((1/(nV)) sum_i |x.u_i|^p h_i^(1-p) a_i)^(1/p), p >= 1.
double lp_support(const Polytope& k, double p, const Vec& x);
/// The lambda > 0 with sum_i phi(x.u_i / (lambda h_i)) m_i = 1; zero for x = 0.
double orlicz_support(const Polytope& k, const Phi& phi, const Vec& x);

/// Polar Orlicz projection body {x : G(x) <= 1}, G(x) = sum_i phi(x.u_i/h_i) m_i.
class PolarStar {
 public:
  PolarStar(const Polytope& k, Phi phi);

  int dim() const { return dim_; }
  const Phi& phi() const { return phi_; }
  const ConeVolumeMeasure& measure() const { return measure_; }
  /// Initial bracketing radius 2 c_phi sqrt(n) / min_i h_i.
  double r_max() const { return r_max_; }

  double G(const Vec& x) const;
  bool contains(const Vec& x) const { return G(x) <= 1.0 + 1e-12; }
  /// The rho > 0 with G(rho v) = 1 (bisection, relative 1e-13).
  double radial(const Vec& v) const;

 private:
  int dim_;
  Phi phi_;
  ConeVolumeMeasure measure_;
  std::vector<Vec> scaled_normals_;  // u_i / h_i
  std::vector<double> masses_;
  double r_max_;
};

struct Membership {
  bool inside;
  double g;
};

Membership polar_membership(const Polytope& k, const Phi& phi, const Vec& x);
double polar_radial_orlicz(const Polytope& k, const Phi& phi, const Vec& v);

struct PolarVolume {
  double value;
  int resolution;
};

/// Volume of the polar Orlicz projection body by radial quadrature. Power
/// functions take the closed-form L_p route, everything else the root finds.
PolarVolume polar_volume(const Polytope& k, const Phi& phi, const SphericalGrid& grid,
                         kernels::Exec exec = kernels::Exec::parallel);
/// Same quantity, always through the per-direction root finds.
PolarVolume polar_volume_by_roots(const Polytope& k, const Phi& phi, const SphericalGrid& grid,
                                  kernels::Exec exec = kernels::Exec::parallel);
/// V(Pi*_phi K) / V(K)
double volume_ratio(const Polytope& k, const Phi& phi, const SphericalGrid& grid,
                    kernels::Exec exec = kernels::Exec::parallel);

/// V(Pi* K) V(K)^(n-1) for the classical projection body.
double petty_product(const Polytope& k, const SphericalGrid& grid,
                     kernels::Exec exec = kernels::Exec::parallel);

/// K intersected with -K.
Polytope linfty_polar(const Polytope& k);

/// alpha phi(a/alpha) + beta phi(b/beta) - (alpha+beta) phi((a+b)/(alpha+beta))
double convexity_deficit(const Phi& phi, double a, double b, double alpha, double beta);

struct GapCheck {
  double deficit;
  double bound;
  double margin() const { return deficit - bound; }
};

/// Opposite-sign stability bound: deficit >= (min{|a|,|b|}/omega)(phi(-omega) + phi(omega)).
GapCheck lemma_phiaround0_gap(const Phi& phi, double a, double b, double alpha, double beta,
                              double omega);
/// Same-sign bound for even phi with positive phi'':
/// deficit >= min phi''(omega, 1/omega) min{alpha^2,beta^2} / (2(alpha+beta)) (a/alpha - b/beta)^2.
GapCheck lemma_phip_gap(const Phi& phi, double a, double b, double alpha, double beta,
                        double omega);

}  // namespace pettylab::orlicz
