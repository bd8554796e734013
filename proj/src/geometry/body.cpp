#include "pettylab/geometry/body.hpp"

#include "pettylab/error.hpp"
#include "pettylab/geometry/shapes.hpp"

#include <algorithm>

namespace pettylab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Vec read_vec(const nlohmann::json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw Error(ErrorCode::InvalidSpec, "expected a vector of length " + std::to_string(dim));
  }
  Vec v = Vec::Zero();
  for (int i = 0; i < dim; ++i) v[i] = j[i].get<double>();
  return v;
}

int read_dim(const nlohmann::json& spec) {
  if (!spec.contains("dim")) throw Error(ErrorCode::InvalidSpec, "body spec needs \"dim\"");
  const int n = spec.at("dim").get<int>();
  if (n != 2 && n != 3) throw Error(ErrorCode::InvalidSpec, "dim must be 2 or 3");
  return n;
}

Vec default_axis(int dim) { return dim == 2 ? Vec::UnitY() : Vec::UnitZ(); }

}  // namespace

int dim(const Body& k) {
  return std::visit([](const auto& b) { return b.dim(); }, k);
}

double support(const Body& k, const Vec& x) {
  return std::visit([&](const auto& b) { return b.support(x); }, k);
}

double radial(const Body& k, const Vec& v) {
  return std::visit([&](const auto& b) { return b.radial(v); }, k);
}

double polar_radial(const Body& k, const Vec& v) {
  return std::visit([&](const auto& b) { return b.polar_radial(v); }, k);
}

double volume(const Body& k) {
  return std::visit([](const auto& b) { return b.volume(); }, k);
}

double volume_from_radial(const RadialOracle& rho, const SphericalGrid& grid, kernels::Exec exec) {
  std::vector<double> values(grid.size());
  kernels::map_indices(values, [&](std::size_t j) { return rho(grid.directions[j]); }, exec);
  return kernels::radial_volume(grid.dim, grid.weights, values);
}

Body parse_body_spec(const nlohmann::json& spec, const BodySpecOptions& options) {
  try {
    const std::string type = spec.at("type").get<std::string>();
    const int n = read_dim(spec);
    const int res = spec.value("resolution", options.resolution(n));
    if (type == "polytope") {
      std::vector<Vec> pts;
      for (const auto& v : spec.at("vertices")) pts.push_back(read_vec(v, n));
      return Polytope::hull(n, pts);
    }
    if (type == "ball") {
      if (options.prefer_revolution) {
        return RevolutionBody::ball(n, default_axis(n), options.profile_samples);
      }
      return ball_polytope(n, res);
    }
    if (type == "ellipsoid") {
      const Vec axes = read_vec(spec.at("semi_axes"), n);
      for (int i = 0; i < n; ++i) {
        if (!(axes[i] > 0.0)) throw Error(ErrorCode::InvalidSpec, "semi_axes must be positive");
      }
      if (options.prefer_revolution) {
        // Coaxial when all but (at most) one semi-axis agree.
        for (int odd = n - 1; odd >= 0; --odd) {
          bool equal = true;
          double eq = -1.0;
          for (int i = 0; i < n; ++i) {
            if (i == odd) continue;
            if (eq < 0.0) eq = axes[i];
            equal = equal && std::abs(axes[i] - eq) <= 1e-12 * eq;
          }
          if (equal) {
            Vec axis = Vec::Zero();
            axis[odd] = 1.0;
            return RevolutionBody::ellipsoid(n, axis, eq, axes[odd], options.profile_samples);
          }
        }
      }
      return ellipsoid_polytope(n, axes, res);
    }
    if (type == "revolution") {
      Vec axis = read_vec(spec.at("axis"), n);
      std::vector<double> t;
      std::vector<double> r;
      for (const auto& row : spec.at("profile")) {
        t.push_back(row.at(0).get<double>());
        r.push_back(row.at(1).get<double>());
      }
      return RevolutionBody::from_profile(n, axis, std::move(t), std::move(r));
    }
    if (type == "cap_ball") {
      const double eps = spec.at("eps").get<double>();
      const Vec axis = spec.contains("axis") ? read_vec(spec.at("axis"), n) : default_axis(n);
      if (options.prefer_revolution) {
        return RevolutionBody::cap_ball(n, axis, eps, options.profile_samples);
      }
      return cap_ball_polytope(n, axis, eps, res);
    }
    throw Error(ErrorCode::InvalidSpec, "unknown body type \"" + type + "\"");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidSpec, e.what());
  }
}

nlohmann::json to_body_spec(const Body& k) {
  return std::visit(
      overloaded{
          [](const Polytope& p) {
            nlohmann::json verts = nlohmann::json::array();
            for (const auto& v : p.vertices()) {
              nlohmann::json row = nlohmann::json::array();
              for (int i = 0; i < p.dim(); ++i) row.push_back(v[i]);
              verts.push_back(row);
            }
            return nlohmann::json{{"type", "polytope"}, {"dim", p.dim()}, {"vertices", verts}};
          },
          [](const RevolutionBody& b) {
            nlohmann::json axis = nlohmann::json::array();
            for (int i = 0; i < b.dim(); ++i) axis.push_back(b.axis()[i]);
            nlohmann::json profile = nlohmann::json::array();
            for (std::size_t i = 0; i < b.heights().size(); ++i) {
              profile.push_back({b.heights()[i], b.radii()[i]});
            }
            return nlohmann::json{
                {"type", "revolution"}, {"dim", b.dim()}, {"axis", axis}, {"profile", profile}};
          },
      },
      k);
}

}  // namespace pettylab
