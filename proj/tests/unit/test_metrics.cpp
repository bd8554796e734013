#include <doctest.h>

#include "pettylab/error.hpp"
#include "pettylab/geometry/shapes.hpp"
#include "pettylab/metrics/metrics.hpp"
#include "pettylab/symmetrize/symmetrize.hpp"

#include <array>

using namespace pettylab;
using namespace pettylab::metrics;

namespace {

// Ellipsoid radial function along a unit direction given (axial, orthogonal) parts.
double ellipsoid_radial(const EllipsoidWitness& e, const Vec& u) {
  double s = 0.0;
  for (std::size_t k = 0; k < e.semi_axes.size(); ++k) {
    const double c = u.dot(e.directions[k]) / e.semi_axes[k];
    s += c * c;
  }
  return 1.0 / std::sqrt(s);
}

void check_witness(const RevolutionBody& k, const DistanceReport& r) {
  Rng rng(99);
  for (int j = 0; j < 512; ++j) {
    const Vec u = rng.unit_vector(k.dim());
    const double rk = k.radial(u);
    const double re = ellipsoid_radial(r.witness_inner, u);
    CHECK(re <= rk * (1 + 1e-6));
    CHECK(rk <= r.witness_outer_scale * re * (1 + 1e-6));
  }
  CHECK(r.verification_error <= 1e-6);
}

}  // namespace

TEST_CASE("bm axial: ellipsoids have distance zero") {
  for (int dim : {2, 3}) {
    const Vec axis = dim == 2 ? Vec(0, 1, 0) : Vec(0, 0, 1);
    const auto e2 = RevolutionBody::ellipsoid(dim, axis, 0.3, 5.0);
    for (const auto& body : {RevolutionBody::ball(dim, axis), e2}) {
      const auto r = bm_distance_to_ball_axial(body);
      CHECK(r.value >= 0.0);
      CHECK(r.value <= 1e-6);
      check_witness(body, r);
    }
  }
}

TEST_CASE("bm axial: square as a spun cylinder") {
  const auto sq = RevolutionBody::cylinder(2, Vec(0, 1, 0), 1.0, 1.0, 101);
  const auto r = bm_distance_to_ball_axial(sq);
  CHECK(r.value <= std::log(std::sqrt(2.0)) + 1e-3);
  CHECK(r.value == doctest::Approx(std::log(std::sqrt(2.0))).epsilon(1e-6));
  check_witness(sq, r);
  // the optimum is the disk pair r = 1 and r = sqrt(2)
  CHECK(r.witness_inner.semi_axes[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.witness_inner.semi_axes[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("bm axial: cap body lower bound") {
  for (double eps : {0.05, 0.1, 0.2, 0.4}) {
    const auto cap = RevolutionBody::cap_ball(2, Vec(0, 1, 0), eps);
    const auto r = bm_distance_to_ball_axial(cap);
    CHECK(r.value >= eps / 2 - 1e-3);
    check_witness(cap, r);
  }
}

TEST_CASE("bm axial: scale invariance, John bound, and el deviation") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 2 + trial % 2;
    const auto k = random_polytope(dim, 20, true, rng);
    const Vec v = rng.unit_vector(dim);
    const auto rev = sym::schwarz_round(k, v, 513);
    const auto r = bm_distance_to_ball_axial(rev);
    CHECK(r.value <= std::log(std::sqrt(static_cast<double>(dim))) + 1e-6);
    // scaled profile
    std::vector<double> t = rev.heights(), rad = rev.radii();
    const double c = rng.uniform(0.1, 10.0);
    for (auto& x : t) x *= c;
    for (auto& x : rad) x *= c;
    const auto scaled = RevolutionBody::from_profile(dim, rev.axis(), t, rad);
    CHECK(std::abs(bm_distance_to_ball_axial(scaled).value - r.value) <= 1e-9);
    const auto el = el_deviation_axial(rev);
    CHECK(el.value >= r.value - 1e-6);
    CHECK(el.value <= 1.0);
  }
  // elongation alone is an affine image: capped value stays at the bm value
  const auto cyl = RevolutionBody::cylinder(3, Vec(0, 0, 1), 1.0, 10.0, 101);
  const auto el = el_deviation_axial(cyl);
  CHECK(el.value == doctest::Approx(bm_distance_to_ball_axial(cyl).value));
  CHECK(el.value <= 1.0);
  CHECK(el_deviation_axial(RevolutionBody::ball(3, Vec(0, 0, 1))).value <= 1e-6);
  const auto cap = RevolutionBody::cap_ball(2, Vec(0, 1, 0), 0.2);
  CHECK(std::abs(el_deviation_axial(cap).value - bm_distance_to_ball_axial(cap).value) <= 1e-6);
}

TEST_CASE("bm axial: rejects bodies that are not o-symmetric") {
  const auto skew = RevolutionBody::from_profile(2, Vec(0, 1, 0), {-1, 0.5, 1}, {0.2, 1, 0.5});
  try {
    bm_distance_to_ball_axial(skew);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateBody);
  }
}

TEST_CASE("distance report json") {
  const auto r = bm_distance_to_ball_axial(RevolutionBody::cap_ball(3, Vec(0, 0, 1), 0.3));
  const auto j = to_json(r);
  CHECK(j.at("method") == "coaxial_scan");
  CHECK(j.at("witness_inner").at("semi_axes").size() == 3);
  CHECK(j.at("value").get<double>() == r.value);
  CHECK(j.at("witness_outer_scale").get<double>() == r.witness_outer_scale);
}

TEST_CASE("isotropic radial-ratio bound") {
  const auto sq = box(2, Vec(3, 1, 0));
  const auto r = bm_upper_bound_isotropic(sq);
  CHECK(r.method == DistanceMethod::radial_ratio);
  CHECK(r.value == doctest::Approx(std::log(std::sqrt(2.0))).epsilon(1e-9));
  const auto disk = ball_polygon(512);
  CHECK(bm_upper_bound_isotropic(disk).value <= 1e-4);
  // witness: E in K in lambda E on sampled directions from the witness center
  Rng rng(8);
  const auto k = random_polytope(2, 9, false, rng);
  const auto b = bm_upper_bound_isotropic(k);
  const auto shifted = k.translated(-b.witness_inner.center);
  for (int j = 0; j < 256; ++j) {
    const Vec u = rng.unit_vector(2);
    const double re = ellipsoid_radial(b.witness_inner, u);
    CHECK(re <= shifted.radial(u) * (1 + 1e-9));
    CHECK(shifted.radial(u) <= b.witness_outer_scale * re * (1 + 1e-9));
  }
}

TEST_CASE("iterated steiner_2d drives polygons to the disk") {
  Rng rng(61);
  for (int trial = 0; trial < 3; ++trial) {
    auto k = random_polytope(2, 7, false, rng);
    const double area = k.volume();
    double last = bm_upper_bound_isotropic(k).value;
    int steps = 0;
    for (; steps < 200 && last >= 0.05; ++steps) {
      // irrational rotation as the fixed direction cycle
      const Vec v = planar(steps * kPi * (std::sqrt(5.0) - 1.0) / 2.0);
      k = sym::prune_polygon(sym::steiner_2d(k, v));
      last = bm_upper_bound_isotropic(k).value;
    }
    CAPTURE(steps);
    CHECK(last < 0.05);
    CHECK(k.volume() == doctest::Approx(area).epsilon(1e-5));
  }
}

TEST_CASE("prune_polygon keeps area and drops near-collinear vertices") {
  const auto fine = ball_polygon(20000);
  const auto pruned = sym::prune_polygon(fine, 1e-9);
  CHECK(pruned.vertices().size() < fine.vertices().size());
  CHECK(pruned.volume() == doctest::Approx(fine.volume()).epsilon(1e-5));
  const auto sq = box(2, Vec(1, 1, 0));
  CHECK(sym::prune_polygon(sq).vertices().size() == 4);
}

TEST_CASE("star_inclusion") {
  const auto grid = spherical_grid(2, 512);
  const auto k = box(2, Vec(1, 0.5, 0));
  RadialOracle b = [&](const Vec& u) { return k.radial(u); };
  RadialOracle a = [&](const Vec& u) { return 0.9 * k.radial(u); };
  const auto same = star_inclusion(b, b, grid, 1e-12);
  CHECK(same.holds);
  CHECK(same.worst_violation <= 0.0);
  const auto inner = star_inclusion(a, b, grid, 1e-12);
  CHECK(inner.holds);
  CHECK(inner.worst_violation == doctest::Approx(-0.1 * 0.5).epsilon(1e-9));
  const auto outer = star_inclusion(b, a, grid, 1e-3);
  CHECK_FALSE(outer.holds);
  CHECK(outer.worst_violation == doctest::Approx(0.1 * std::sqrt(1.25)).epsilon(1e-2));
  CHECK(outer.worst_direction.norm() == doctest::Approx(1.0));
  RadialOracle bad = [](const Vec&) { return 0.0; };
  CHECK_THROWS_AS(star_inclusion(bad, b, grid, 0.0), Error);
}

TEST_CASE("steiner_symmetral_of_star: fixed points and symmetry") {
  const auto disk = ball_polygon(256);
  const orlicz::PolarStar round(disk, orlicz::Phi::power(1));
  const auto s = steiner_symmetral_of_star(round, planar(0.3));
  for (int j = 0; j < 32; ++j) {
    const Vec u = planar(0.2 * j);
    CHECK(s(u) == doctest::Approx(round.radial(u)).epsilon(1e-3));
  }

  // o-symmetric polar with v along a symmetry axis is a fixed point
  const auto rect = box(2, Vec(1.5, 0.5, 0));
  const orlicz::PolarStar rp(rect, orlicz::Phi::power(2));
  const auto sr = steiner_symmetral_of_star(rp, Vec(0, 1, 0));
  for (int j = 0; j < 64; ++j) {
    const Vec u = planar(0.1 * j + 0.01);
    CHECK(std::abs(sr(u) - rp.radial(u)) <= 1e-6 * rp.radial(u));
  }

  // shifted phi: the polar is not o-symmetric, its symmetral is symmetric in v-perp
  Rng rng(3);
  const auto k = random_polytope(2, 10, false, rng);
  const orlicz::PolarStar sk(k, orlicz::Phi::asymmetric_power(2, 3, 0.4));
  const Vec v = rng.unit_vector(2);
  const auto ss = steiner_symmetral_of_star(sk, v);
  for (int j = 0; j < 32; ++j) {
    const Vec u = rng.unit_vector(2);
    const Vec reflected = u - 2.0 * u.dot(v) * v;
    CHECK(std::abs(ss(u) - ss(reflected)) <= 1e-6 * ss(u));
  }
}

TEST_CASE("steiner_symmetral_of_star: matches steiner_2d on polygons") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto k = random_polytope(2, 8, trial % 2 == 0, rng);
    const Vec v = rng.unit_vector(2);
    // gauge of the polygon: max_i x.u_i / h_i
    MembershipFn gauge = [&](const Vec& x) {
      double g = 0.0;
      for (const auto& f : k.facets()) g = std::max(g, x.dot(f.normal) / f.support);
      return g;
    };
    double reach = 0.0;
    for (const auto& p : k.vertices()) reach = std::max(reach, p.norm());
    const auto star = steiner_symmetral_of_star(gauge, 2, v, reach);
    const auto exact = sym::steiner_2d(k, v);
    for (int j = 0; j < 40; ++j) {
      const Vec u = rng.unit_vector(2);
      CHECK(star(u) == doctest::Approx(exact.radial(u)).epsilon(1e-9));
    }
  }
}

TEST_CASE("steiner_symmetral_of_star: non-convex input is detected") {
  // two disjoint blobs along e_1: the projection onto e_1 is not an interval
  MembershipFn gauge = [](const Vec& x) {
    const double a = (x - Vec(1.5, 0, 0)).norm() / 0.5;
    const double b = (x + Vec(1.5, 0, 0)).norm() / 0.5;
    const double c = x.norm() / 0.3;
    return std::min({a, b, c});
  };
  try {
    steiner_symmetral_of_star(gauge, 2, Vec(0, 1, 0), 2.5, 257);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonConvexStar);
  }
}

TEST_CASE("Steiner inclusion for polar Orlicz projection bodies") {
  Rng rng(71);
  const auto grid = spherical_grid(2, 256);
  for (int trial = 0; trial < 4; ++trial) {
    const auto k = random_polytope(2, 6, false, rng);
    const Vec v = rng.unit_vector(2);
    const auto phi = trial % 2 ? orlicz::Phi::power(2) : orlicz::Phi::asymmetric_power(2, 1.5, 0.5);
    const orlicz::PolarStar pk(k, phi);
    const orlicz::PolarStar psk(sym::steiner_2d(k, v), phi);
    const auto lhs = steiner_symmetral_of_star(pk, v);
    const auto rep = star_inclusion(lhs, [&](const Vec& u) { return psk.radial(u); }, grid, 1e-9);
    CHECK(rep.holds);
  }
}
