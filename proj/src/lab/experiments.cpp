#include "pettylab/error.hpp"
#include "pettylab/geometry/shapes.hpp"
#include "pettylab/lab/lab.hpp"
#include "pettylab/metrics/metrics.hpp"
#include "pettylab/orlicz/projection.hpp"
#include "pettylab/symmetrize/symmetrize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

namespace pettylab::lab {

namespace {

using orlicz::Phi;

Polytope as_polytope(const Body& b) {
  if (const auto* p = std::get_if<Polytope>(&b)) return *p;
  return sym::to_polytope(std::get<RevolutionBody>(b));
}

Vec default_axis(int dim) { return dim == 2 ? Vec::UnitY() : Vec::UnitZ(); }

std::string fixed(double x, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// A polar volume at the configured grid together with the half-grid value.
struct GatedVolume {
  double value;
  double coarse;
  double relative_change() const { return std::abs(value - coarse) / value; }
};

class Grids {
 public:
  explicit Grids(const ExperimentConfig& c)
      : fine_(spherical_grid(c.dim, c.grid())), coarse_(spherical_grid(c.dim, c.grid() / 2)) {}
  const SphericalGrid& fine() const { return fine_; }
  const SphericalGrid& coarse() const { return coarse_; }

 private:
  SphericalGrid fine_;
  SphericalGrid coarse_;
};

ResultRow gate_row(const std::string& exp, const std::string& body, const GatedVolume& g,
                   const ExperimentConfig& c) {
  return make_row(exp, body, "grid_gate", g.relative_change(), 0.0, 3.0 * c.tol("quad"),
                  Comparison::le);
}

// Ratio of the reference ball: a fine discretization of B^n.
double reference_ball_ratio(const ExperimentConfig& c, const Phi& phi, const SphericalGrid& grid) {
  const Polytope ball = ball_polytope(c.dim, c.dim == 2 ? 4096 : 8000);
  return orlicz::volume_ratio(ball, phi, grid);
}

// Closed-form ratio V(Pi*_phi B)/V(B) for phi = |t|^p.
double exact_ball_ratio(int n, double p) {
  const double integral = n == 2 ? 2.0 * std::sqrt(kPi) * std::tgamma((p + 1.0) / 2.0) /
                                       std::tgamma(p / 2.0 + 1.0)
                                 : 4.0 * kPi / (p + 1.0);
  const double c = integral / (n * kappa(n));
  return std::pow(c, -n / p);
}

}  // namespace

Table exp_petty(const ExperimentConfig& config) {
  config.validate();
  const std::string exp = "petty";
  const Grids grids(config);
  const double bound = petty_bound(config.dim);
  const double quad = config.tol("quad");
  Table rows;
  for (const auto& e : build_corpus(config)) {
    const Polytope k = as_polytope(e.body);
    const GatedVolume g{orlicz::petty_product(k, grids.fine()),
                        orlicz::petty_product(k, grids.coarse())};
    rows.push_back(gate_row(exp, e.id, g, config));
    rows.push_back(make_row(exp, e.id, "petty_le_bound", g.value, bound, 3.0 * quad * bound,
                            Comparison::le));
    if (e.ellipsoidal) {
      rows.push_back(make_row(exp, e.id, "petty_equality", g.value, bound,
                              config.tol("petty_equality") * bound, Comparison::eq));
    }
    if (e.expect.contains("petty")) {
      const double want = e.expect.at("petty").get<double>();
      rows.push_back(make_row(exp, e.id, "petty_known", g.value, want,
                              std::max(config.tol("known"), 3.0 * quad * want), Comparison::eq));
    }
  }
  return rows;
}

Table exp_orlicz_ratio(const ExperimentConfig& config) {
  config.validate();
  const std::string exp = "orlicz_ratio";
  const Phi phi = config.phi();
  const Grids grids(config);
  const double quad = config.tol("quad");
  Table rows;
  const double ref = reference_ball_ratio(config, phi, grids.fine());
  if (phi.is_power()) {
    const double exact = exact_ball_ratio(config.dim, phi.exponent());
    rows.push_back(make_row(exp, "ball-reference", "ball_closed_form", ref, exact,
                            3.0 * quad * exact, Comparison::eq));
  }
  Rng rng(config.seed);
  for (const auto& e : build_corpus(config)) {
    const Polytope k = as_polytope(e.body);
    const double vk = k.volume();
    const GatedVolume g{orlicz::polar_volume(k, phi, grids.fine()).value / vk,
                        orlicz::polar_volume(k, phi, grids.coarse()).value / vk};
    rows.push_back(gate_row(exp, e.id, g, config));
    rows.push_back(make_row(exp, e.id, "ratio_le_ball", g.value, ref, 3.0 * quad * ref,
                            Comparison::le));
    if (phi.strictly_convex() && !e.ellipsoidal) {
      rows.push_back(make_row(exp, e.id, "strict_gap", ref - g.value, 0.0, 3.0 * quad * ref,
                              Comparison::gt));
    }
    const Mat a = random_linear_map(config.dim, rng);
    const double mapped = orlicz::volume_ratio(k.transformed(a), phi, grids.fine());
    rows.push_back(make_row(exp, e.id, "gl_invariance", mapped, g.value,
                            config.tol("gl") * g.value, Comparison::eq));
  }
  return rows;
}

Table exp_steiner_monotone(const ExperimentConfig& config) {
  config.validate();
  if (config.dim != 2) {
    throw Error(ErrorCode::PreconditionViolated, "steiner-monotone runs on planar bodies only");
  }
  const std::string exp = "steiner_monotone";
  const Phi phi = config.phi();
  const SphericalGrid grid = spherical_grid(2, config.grid());
  const SphericalGrid check_grid = spherical_grid(2, 512);
  const double quad = config.tol("quad");
  constexpr int kDirections = 8;
  constexpr int kIterations = 20;
  Table rows;
  Rng rng(config.seed);
  for (const auto& e : build_corpus(config)) {
    const Polytope k = as_polytope(e.body);
    if (k.dim() != 2) throw Error(ErrorCode::InvalidSpec, "corpus entry '" + e.id + "' is not planar");
    const orlicz::PolarStar star(k, phi);
    const double vk = orlicz::polar_volume(k, phi, grid).value;
    for (int d = 0; d < kDirections; ++d) {
      const Vec v = rng.unit_vector(2);
      const std::string tag = "_v" + std::to_string(d);
      const Polytope s = sym::steiner_2d(k, v);
      const orlicz::PolarStar star_s(s, phi);
      const RadialOracle lhs = metrics::steiner_symmetral_of_star(star, v);
      const RadialOracle rhs = [&star_s](const Vec& u) { return star_s.radial(u); };
      double scale = 0.0;
      for (const auto& u : check_grid.directions) scale = std::max(scale, rhs(u));
      const double tol = config.tol("inclusion") * scale;
      const auto inc = metrics::star_inclusion(lhs, rhs, check_grid, tol);
      rows.push_back(make_row(exp, e.id, "inclusion" + tag, inc.worst_violation, 0.0, tol,
                              Comparison::le));
      const double vs = orlicz::polar_volume(s, phi, grid).value;
      rows.push_back(make_row(exp, e.id, "volume" + tag, vs, vk, 3.0 * quad * vk, Comparison::ge));
    }
    // Iterated symmetrization: the worst relative step change must stay above -tol.
    Polytope cur = k;
    double prev = vk;
    double worst = std::numeric_limits<double>::infinity();
    for (int it = 0; it < kIterations; ++it) {
      cur = sym::prune_polygon(sym::steiner_2d(cur, rng.unit_vector(2)));
      const double next = orlicz::polar_volume(cur, phi, grid).value;
      worst = std::min(worst, (next - prev) / prev);
      prev = next;
    }
    rows.push_back(make_row(exp, e.id, "iterated_min_step", worst, 0.0, 3.0 * quad, Comparison::ge));
  }
  return rows;
}

Table exp_example_cap(const ExperimentConfig& config) {
  config.validate();
  const std::string exp = "example_cap";
  const int n = config.dim;
  const double quad = config.tol("quad");
  const SphericalGrid grid = spherical_grid(n, n == 2 ? std::max(config.grid(), 16384) : config.grid());
  const Vec axis = default_axis(n);
  const double bound = petty_bound(n);
  const std::vector<double> eps_grid = {0.05, 0.1, 0.15, 0.2, 0.3, 0.4};
  Table rows;
  std::vector<double> xs;
  std::vector<double> ds;
  for (double eps : eps_grid) {
    const std::string id = "cap-" + fixed(eps, 2);
    const Polytope k = cap_ball_polytope(n, axis, eps, n == 2 ? 4096 : 8000);
    const double d = 1.0 - orlicz::petty_product(k, grid) / bound;
    rows.push_back(make_row(exp, id, "deficit_positive", d, 0.0, 3.0 * quad, Comparison::gt));
    xs.push_back(eps);
    ds.push_back(d);
    const auto bm = metrics::bm_distance_to_ball_axial(
        sym::schwarz_round(RevolutionBody::cap_ball(n, axis, eps), axis));
    rows.push_back(make_row(exp, id, "bm_ge_half_eps", bm.value, eps / 2.0, config.tol("bm"),
                            Comparison::ge));
  }
  // Drop the smallest eps when its deficit is at noise level.
  if (ds.front() < 10.0 * quad) {
    xs.erase(xs.begin());
    ds.erase(ds.begin());
  }
  double slope = std::numeric_limits<double>::quiet_NaN();
  if (std::all_of(ds.begin(), ds.end(), [](double d) { return d > 0.0; })) {
    slope = loglog_slope(xs, ds);
  }
  rows.push_back(make_row(exp, "cap-family", "deficit_slope", slope, (n + 1) / 2.0,
                          config.tol("slope"), Comparison::eq));
  return rows;
}

Table exp_stability_sign(const ExperimentConfig& config) {
  config.validate();
  const std::string exp = "stability_sign";
  const Phi phi = config.phi();
  const SphericalGrid grid = spherical_grid(config.dim, config.grid());
  const double quad = config.tol("quad");
  const double ref = reference_ball_ratio(config, phi, grid);
  Table rows;
  std::map<std::string, std::vector<std::pair<double, double>>> families;  // family -> (param, deficit)
  bool dilated = false;
  auto entries = build_corpus(config);
  for (const auto& e : entries) {
    const Polytope k = as_polytope(e.body);
    const double deficit = 1.0 - orlicz::volume_ratio(k, phi, grid) / ref;
    if (e.ellipsoidal) {
      rows.push_back(make_row(exp, e.id, "ellipsoid_deficit", deficit, 0.0, config.tol("petty_equality"),
                              Comparison::le));
      if (!dilated) {
        dilated = true;
        const double dd = 1.0 - orlicz::volume_ratio(k.scaled(2.5), phi, grid) / ref;
        rows.push_back(make_row(exp, e.id + "-dilated", "ellipsoid_deficit", dd, 0.0,
                                config.tol("petty_equality"),
                                Comparison::le));
      }
    } else {
      double delta = 0.0;
      const Body axial = e.family == "cap" ? parse_body_spec(e.spec, {.prefer_revolution = true})
                                           : e.body;
      if (const auto* rev = std::get_if<RevolutionBody>(&axial)) {
        delta = metrics::bm_distance_to_ball_axial(sym::schwarz_round(*rev, rev->axis())).value;
      } else {
        delta = metrics::bm_upper_bound_isotropic(k).value;
      }
      rows.push_back(make_row(exp, e.id, "delta_bm", delta, 0.0, 0.0, Comparison::ge));
      if (delta > config.tol("stability_bm")) {
        rows.push_back(make_row(exp, e.id, "deficit_positive", deficit, 0.0, 3.0 * quad,
                                Comparison::gt));
      }
    }
    if (!e.family.empty()) families[e.family].emplace_back(e.param, deficit);
  }
  for (auto& [name, members] : families) {
    std::stable_sort(members.begin(), members.end());
    for (std::size_t i = 1; i < members.size(); ++i) {
      rows.push_back(make_row(exp, name + "-family",
                              "nondecreasing_" + fixed(members[i - 1].first, 2) + "_" +
                                  fixed(members[i].first, 2),
                              members[i].second, members[i - 1].second, 3.0 * quad,
                              Comparison::ge));
    }
  }
  return rows;
}

Table exp_lemma_suite(const ExperimentConfig& config) {
  config.validate();
  const std::string exp = "lemma_suite";
  const Phi phi = config.phi();
  const double slack = config.tol("lemma");
  constexpr int kSamples = 10000;
  Table rows;
  const Phi square = Phi::power(2.0);
  rows.push_back(make_row(exp, square.name(), "opposite_sign_equality",
                          orlicz::lemma_phiaround0_gap(square, 1, -1, 1, 1, 1).margin(), 0.0, 1e-12,
                          Comparison::eq));
  rows.push_back(make_row(exp, square.name(), "same_sign_equality",
                          orlicz::lemma_phip_gap(square, 2, 1, 1, 1, 0.5).margin(), 0.0, 1e-12,
                          Comparison::eq));

  const std::string id = phi.name();
  {
    Rng rng(config.seed);
    int violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kSamples; ++i) {
      const double alpha = rng.uniform(0.1, 3.0);
      const double beta = rng.uniform(0.1, 3.0);
      const double x = rng.uniform(0.05, 5.0);
      const double y = rng.uniform(0.05, 5.0);
      const double omega = std::min(x, y) * rng.uniform(0.01, 1.0);
      const double sign = rng.uniform() < 0.5 ? 1.0 : -1.0;
      const auto g = orlicz::lemma_phiaround0_gap(phi, sign * x * alpha, -sign * y * beta, alpha,
                                                  beta, omega);
      const double m = g.margin() / std::max(1.0, std::abs(g.bound));
      worst = std::min(worst, m);
      if (m < -slack) ++violations;
    }
    rows.push_back(make_row(exp, id, "opposite_sign_violations", violations, 0.0, 0.0, Comparison::le));
    rows.push_back(make_row(exp, id, "opposite_sign_min_margin", worst, 0.0, slack, Comparison::ge));
  }
  const bool admissible = phi.is_even() && phi.min_second_derivative(0.05, 20.0) > 0.0;
  if (!admissible) {
    rows.push_back(make_row(exp, id, "same_sign_admissible", 0.0, 1.0, 0.0, Comparison::eq));
    return rows;
  }
  {
    Rng rng(config.seed + 1);
    int violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kSamples; ++i) {
      const double alpha = rng.uniform(0.1, 3.0);
      const double beta = rng.uniform(0.1, 3.0);
      const double omega = rng.uniform(0.05, 1.0);
      const double x = rng.uniform(omega, 1.0 / omega);
      const double y = rng.uniform(omega, 1.0 / omega);
      const auto g = orlicz::lemma_phip_gap(phi, x * alpha, y * beta, alpha, beta, omega);
      const double m = g.margin() / std::max(1.0, std::abs(g.bound));
      worst = std::min(worst, m);
      if (m < -slack) ++violations;
    }
    rows.push_back(make_row(exp, id, "same_sign_violations", violations, 0.0, 0.0, Comparison::le));
    rows.push_back(make_row(exp, id, "same_sign_min_margin", worst, 0.0, slack, Comparison::ge));
  }
  return rows;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"petty",       "orlicz_ratio",   "steiner_monotone",
                                                 "example_cap", "stability_sign", "lemma_suite"};
  return names;
}

Table run_experiment(const std::string& name, const ExperimentConfig& config) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  Table rows;
  if (key == "all") {
    for (const auto& n : experiment_names()) {
      if (n == "steiner_monotone" && config.dim != 2) continue;
      auto part = run_experiment(n, config);
      rows.insert(rows.end(), part.begin(), part.end());
    }
  } else if (key == "petty") {
    rows = exp_petty(config);
  } else if (key == "orlicz_ratio") {
    rows = exp_orlicz_ratio(config);
  } else if (key == "steiner_monotone") {
    rows = exp_steiner_monotone(config);
  } else if (key == "example_cap") {
    rows = exp_example_cap(config);
  } else if (key == "stability_sign") {
    rows = exp_stability_sign(config);
  } else if (key == "lemma_suite") {
    rows = exp_lemma_suite(config);
  } else {
    throw Error(ErrorCode::InvalidSpec, "unknown experiment '" + name + "'");
  }
  sort_rows(rows);
  return rows;
}

}  // namespace pettylab::lab
