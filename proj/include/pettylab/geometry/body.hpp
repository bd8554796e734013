#pragma once

#include "pettylab/geometry/polytope.hpp"
#include "pettylab/geometry/revolution_body.hpp"
#include "pettylab/geometry/sphere_grid.hpp"
#include "pettylab/kernels/kernels.hpp"

#include <json.hpp>

#include <functional>
#include <variant>

namespace pettylab {

using Body = std::variant<Polytope, RevolutionBody>;
using RadialOracle = std::function<double(const Vec&)>;

int dim(const Body& k);
double support(const Body& k, const Vec& x);
double radial(const Body& k, const Vec& v);
double polar_radial(const Body& k, const Vec& v);
double volume(const Body& k);

/// sum_j w_j rho(v_j)^n / n; throws NonpositiveRadial on any rho <= 0.
double volume_from_radial(const RadialOracle& rho, const SphericalGrid& grid,
                          kernels::Exec exec = kernels::Exec::parallel);

struct BodySpecOptions {
  int resolution_2d = 256;   // polygon vertices for discretized balls/ellipsoids
  int resolution_3d = 2000;  // Fibonacci points for discretized balls/ellipsoids
  bool prefer_revolution = false;
  int profile_samples = kDefaultProfileSamples;

  int resolution(int dim) const { return dim == 2 ? resolution_2d : resolution_3d; }
};

/// Parses one body-spec entry:
///   {"type":"polytope","dim":n,"vertices":[[...],...]}
///   {"type":"ball","dim":n}
///   {"type":"ellipsoid","dim":n,"semi_axes":[...]}
///   {"type":"revolution","dim":n,"axis":[...],"profile":[[t,r],...]}
///   {"type":"cap_ball","dim":n,"eps":e}            (optional "axis")
/// Optional "resolution" overrides the discretization resolution.
Body parse_body_spec(const nlohmann::json& spec, const BodySpecOptions& options = {});

/// Serializes as a "polytope" or "revolution" entry.
nlohmann::json to_body_spec(const Body& k);

}  // namespace pettylab
