// Acceptance checks: one PASS/FAIL line per criterion.
#include "pettylab/error.hpp"
#include "pettylab/geometry/moments.hpp"
#include "pettylab/geometry/shapes.hpp"
#include "pettylab/lab/lab.hpp"
#include "pettylab/metrics/metrics.hpp"
#include "pettylab/orlicz/projection.hpp"
#include "pettylab/symmetrize/symmetrize.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

using namespace pettylab;
using orlicz::Phi;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string g(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// 1. Petty product of ball discretizations against (kappa_n/kappa_{n-1})^n.
void petty_equality(Outcome& o) {
  {
    const auto t0 = Clock::now();
    const double p = orlicz::petty_product(ball_polytope(2, 256), spherical_grid(2, 4096));
    const double bound = std::pow(kPi / 2.0, 2);
    const double rel = std::abs(p - bound) / bound;
    const double t = seconds_since(t0);
    o.detail << "n=2: " << g(p) << " vs " << g(bound) << " (rel " << g(rel) << ", " << g(t) << " s); ";
    o.require(rel <= 0.01, "n=2 within 1%");
    o.require(t < 30.0, "n=2 runtime");
  }
  {
    const auto t0 = Clock::now();
    const double p = orlicz::petty_product(ball_polytope(3, 2000), spherical_grid(3, 8192));
    const double bound = std::pow(4.0 / 3.0, 3);
    const double rel = std::abs(p - bound) / bound;
    const double t = seconds_since(t0);
    o.detail << "n=3: " << g(p) << " vs " << g(bound) << " (rel " << g(rel) << ", " << g(t) << " s)";
    o.require(rel <= 0.02, "n=3 within 2%");
    o.require(t < 30.0, "n=3 runtime");
  }
}

// 2. Square: exact polar of the zonotope Pi K has vertices +-e_i / h_{Pi K}(e_i).
void square_witness(Outcome& o) {
  const auto t0 = Clock::now();
  const Polytope sq = box(2, Vec(1, 1, 0));
  const double p = orlicz::petty_product(sq, spherical_grid(2, 4096));
  std::vector<Vec> pts;
  for (const Vec& e : {Vec(1, 0, 0), Vec(-1, 0, 0), Vec(0, 1, 0), Vec(0, -1, 0)}) {
    pts.push_back(e / orlicz::classical_projection_support(sq, e));
  }
  const double exact = Polytope::hull(2, pts).volume() * sq.volume();
  const double t = seconds_since(t0);
  o.detail << "product " << g(p) << ", oracle " << g(exact) << " (polar area "
           << g(exact / sq.volume()) << "), " << g(t) << " s";
  o.require(std::abs(exact - 2.0) <= 1e-12, "oracle equals 2");
  o.require(std::abs(p - 2.0) <= 1e-3, "product 2 +- 1e-3");
  o.require(p < std::pow(kPi / 2.0, 2), "strictly below the ball value");
  o.require(t < 1.0, "runtime");
}

// 3. orlicz_support(power(p)) against the closed-form L_p support.
void lp_consistency(Outcome& o) {
  const auto t0 = Clock::now();
  Rng rng(3);
  const double ps[] = {1.0, 1.5, 2.0, 3.0, 8.0};
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    const Polytope k = random_polytope(n, 6 + i % 9, i % 3 == 0, rng);
    const Vec x = rng.unit_vector(n) * rng.uniform(0.2, 5.0);
    const double p = ps[i % 5];
    const double lp = orlicz::lp_support(k, p, x);
    const double os = orlicz::orlicz_support(k, Phi::power(p), x);
    worst = std::max(worst, std::abs(os - lp) / lp);
  }
  const double t = seconds_since(t0);
  o.detail << "max rel deviation " << g(worst) << " over 100 triples, " << g(t) << " s";
  o.require(worst <= 1e-8, "deviation <= 1e-8");
  o.require(t < 10.0, "runtime");
}

// 4. Pi*_phi(AK) = A Pi*_phi K, pointwise on radial functions.
void gl_equivariance(Outcome& o) {
  const auto t0 = Clock::now();
  Rng rng(4);
  const Phi phis[] = {Phi::power(2.0), Phi::asymmetric_power(2.0, 3.0, 0.5), Phi::power(1.0)};
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int n = 2 + i % 2;
    const Phi& phi = phis[i % 3];
    const Polytope k = random_polytope(n, 8 + i % 7, i % 2 == 0, rng);
    const Mat a = random_linear_map(n, rng);
    const Mat inv = a.inverse();
    const Polytope ak = k.transformed(a);
    const orlicz::PolarStar lhs(ak, phi);
    const orlicz::PolarStar rhs(k, phi);
    for (int j = 0; j < 64; ++j) {
      const Vec v = rng.unit_vector(n);
      const Vec w = inv * v;
      // rho_{AL}(v) = rho_L(A^{-1} v) = rho_L(w/|w|) / |w|
      const double expect = rhs.radial(w.normalized()) / w.norm();
      const double got = lhs.radial(v);
      worst = std::max(worst, std::abs(got - expect) / expect);
    }
  }
  const double t = seconds_since(t0);
  o.detail << "max rel deviation " << g(worst) << " over 20 maps x 64 directions, " << g(t) << " s";
  o.require(worst <= 1e-6, "deviation <= 1e-6");
  o.require(t < 30.0, "runtime");
}

// 5. Symmetral inclusion and volume monotonicity over 20 seeded polygons.
void steiner_monotone(Outcome& o) {
  const auto t0 = Clock::now();
  lab::ExperimentConfig c;
  c.corpus = lab::random_corpus(2, 20, 7);
  const auto rows = lab::exp_steiner_monotone(c);
  int inclusion = 0, volume = 0, failed = 0;
  double worst_violation = -std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    if (r.check.rfind("inclusion", 0) == 0) {
      ++inclusion;
      worst_violation = std::max(worst_violation, r.value);
    }
    if (r.check.rfind("volume", 0) == 0) ++volume;
    if (!r.passed) ++failed;
  }
  const double t = seconds_since(t0);
  o.detail << inclusion << " inclusion checks (worst violation " << g(worst_violation) << "), "
           << volume << " volume checks, " << failed << " failed rows, " << g(t) << " s";
  o.require(inclusion == 160 && volume == 160, "20 x 8 checks");
  o.require(failed == 0, "all rows pass");
  o.require(t < 120.0, "runtime");
}

// 6. Volume preservation of the symmetrizations.
void volume_preservation(Outcome& o) {
  Rng rng(6);
  double worst2 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Polytope k = random_polytope(2, 5 + i % 20, i % 2 == 0, rng);
    const double v = k.volume();
    worst2 = std::max(worst2, std::abs(sym::steiner_2d(k, rng.unit_vector(2)).volume() - v) / v);
  }
  o.detail << "steiner_2d max rel error " << g(worst2) << "; ";
  o.require(worst2 <= 1e-12, "steiner_2d exact");

  double worst3 = 0.0;
  bool decreasing3 = true;
  for (int i = 0; i < 5; ++i) {
    const Polytope k = random_polytope(3, 20 + 5 * i, i % 2 == 0, rng);
    const Vec v = rng.unit_vector(3);
    const double exact = k.volume();
    const double e1 = std::abs(sym::steiner_3d(k, v).volume() - exact) / exact;
    const double e2 =
        std::abs(sym::steiner_3d(k, v, 2 * sym::kDefaultSteinerGrid).volume() - exact) / exact;
    worst3 = std::max(worst3, e1);
    decreasing3 = decreasing3 && e2 < e1;
  }
  o.detail << "steiner_3d max rel error " << g(worst3) << "; ";
  o.require(worst3 <= 0.005, "steiner_3d within 0.5%");
  o.require(decreasing3, "steiner_3d error decreases under doubling");

  double worst_r = 0.0;
  bool decreasing_r = true;
  for (int i = 0; i < 6; ++i) {
    const int n = 2 + i % 2;
    const Polytope k = random_polytope(n, 10 + 4 * i, i % 3 == 0, rng);
    const Vec v = rng.unit_vector(n);
    const double exact = k.volume();
    const double e1 = std::abs(sym::schwarz_round(k, v).volume() - exact) / exact;
    const double e2 =
        std::abs(sym::schwarz_round(k, v, 2 * sym::kDefaultSlices - 1).volume() - exact) / exact;
    worst_r = std::max(worst_r, e1);
    decreasing_r = decreasing_r && e2 < e1;
  }
  o.detail << "schwarz_round max rel error " << g(worst_r);
  o.require(worst_r <= 0.005, "schwarz_round within 0.5%");
  o.require(decreasing_r, "schwarz_round error decreases under doubling");
}

// 7. Cap-body deficits: fitted exponent and distance lower bound.
void example_scaling(Outcome& o) {
  const auto t0 = Clock::now();
  lab::ExperimentConfig c;
  const auto rows = lab::exp_example_cap(c);
  for (const auto& r : rows) {
    if (r.check == "deficit_slope") {
      o.detail << "slope " << g(r.value) << " (target 1.5 +- 0.3); ";
      o.require(r.passed, "slope");
    } else if (r.check == "bm_ge_half_eps") {
      o.require(r.passed, r.body + " distance >= eps/2");
    } else {
      o.require(r.passed, r.body + " " + r.check);
    }
  }
  const double t = seconds_since(t0);
  o.detail << g(t) << " s";
  o.require(t < 120.0, "runtime");
}

// 8. Ball maximizes V(Pi*_phi K)/V(K); strict gap for strictly convex phi.
void ball_maximality(Outcome& o) {
  for (int n : {2, 3}) {
    for (double p : {1.0, 2.0, 4.0}) {
      lab::ExperimentConfig c;
      c.dim = n;
      c.phi_spec = Phi::power(p).to_json();
      const auto rows = lab::exp_orlicz_ratio(c);
      int le = 0, gap = 0, bad = 0;
      double min_gap = std::numeric_limits<double>::infinity();
      for (const auto& r : rows) {
        if (r.check == "ratio_le_ball") {
          ++le;
          if (!r.passed) ++bad;
        } else if (r.check == "strict_gap") {
          ++gap;
          min_gap = std::min(min_gap, r.value);
          if (!r.passed) ++bad;
        }
      }
      o.detail << "n=" << n << " p=" << p << ": " << le << " bodies";
      if (gap > 0) o.detail << ", min gap " << g(min_gap);
      o.detail << "; ";
      o.require(bad == 0, "n=" + std::to_string(n) + " p=" + g(p));
      o.require(p == 1.0 || gap > 0, "strict gap rows present");
    }
  }
}

// 9. Convexity-gap sample suites.
void lemma_suites(Outcome& o) {
  for (double p : {2.0, 4.0}) {
    lab::ExperimentConfig c;
    c.phi_spec = Phi::power(p).to_json();
    const auto rows = lab::exp_lemma_suite(c);
    for (const auto& r : rows) {
      if (r.check.find("violations") != std::string::npos) {
        o.detail << "p=" << p << " " << r.check << " " << r.value << "; ";
      }
      if (r.check.find("equality") != std::string::npos && p == 2.0) {
        o.detail << r.check << " margin " << g(r.value) << "; ";
      }
      o.require(r.passed, g(p) + " " + r.check);
    }
  }
}

// 10. Exact identities.
void identities(Outcome& o) {
  Rng rng(10);
  double worst_product = 0.0;
  bool bitwise = true;
  double worst_pi1 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 2;
    const Polytope k = random_polytope(n, 8 + i % 10, i % 2 == 0, rng);
    const double nv = n * k.volume();
    for (int j = 0; j < 20; ++j) {
      const Vec v = rng.unit_vector(n);
      const double h = k.support(v);
      const double rho = k.polar_radial(v);
      bitwise = bitwise && rho == 1.0 / h;
      worst_product = std::max(worst_product, std::abs(rho * h - 1.0));
      const double pi1 = orlicz::lp_support(k, 1.0, v);
      const double pi = 2.0 / nv * orlicz::classical_projection_support(k, v);
      worst_pi1 = std::max(worst_pi1, std::abs(pi1 - pi) / pi);
    }
  }
  o.detail << "|rho h - 1| max " << g(worst_product) << "; Pi_1 rel " << g(worst_pi1) << "; ";
  o.require(bitwise && worst_product <= 0x1.0p-52, "rho_{K*} h_K = 1");
  o.require(worst_pi1 <= 1e-12, "Pi_1 = (2/nV) Pi");

  double worst_moment = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 2;
    std::vector<double> axes;
    for (int j = 0; j < n; ++j) axes.push_back(rng.uniform(0.2, 5.0));
    const auto m = ellipsoid_moment_check(axes, rng.unit_vector(n));
    worst_moment = std::max(worst_moment, std::abs(m.lhs - m.rhs) / std::abs(m.rhs));
  }
  o.detail << "ellipsoid moments rel " << g(worst_moment) << "; ";
  o.require(worst_moment <= 1e-9, "ellipsoid moment identity");

  const auto iso = make_isotropic(box(3, Vec(1, 1, 1)));
  const double l = iso.moments.isotropic_constant;
  o.detail << "cube L = " << std::setprecision(15) << l;
  o.require(std::abs(l - 1.0 / 12.0) <= 1e-9, "cube isotropic constant 1/12");
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"Petty equality at the ball", petty_equality},
      {"strict inequality witness (square)", square_witness},
      {"L_p / Orlicz support consistency", lp_consistency},
      {"GL(n) equivariance of the polar Orlicz body", gl_equivariance},
      {"Steiner monotonicity", steiner_monotone},
      {"volume preservation of symmetrizations", volume_preservation},
      {"cap example scaling", example_scaling},
      {"maximality of the ball", ball_maximality},
      {"scalar lemma suites", lemma_suites},
      {"identity suite", identities},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const auto& list = criteria();
  int failures = 0;
  for (int i = 1; i <= static_cast<int>(list.size()); ++i) {
    if (only != 0 && only != i) continue;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      list[i - 1].run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    const double t = seconds_since(t0);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i << " (" << list[i - 1].title
              << ", " << g(t) << " s): " << o.detail.str() << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
