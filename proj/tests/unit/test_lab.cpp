#include <doctest.h>

#include "pettylab/error.hpp"
#include "pettylab/lab/lab.hpp"

#include <cmath>
#include <sstream>

using namespace pettylab;
using namespace pettylab::lab;
using nlohmann::json;

namespace {

json square_spec() {
  return {{"type", "polytope"},
          {"dim", 2},
          {"vertices", {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}},
          {"id", "square"},
          {"expect", {{"petty", 2.0}}}};
}

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.grid_resolution = 1024;
  c.corpus = {square_spec(),
              {{"type", "ball"}, {"dim", 2}, {"resolution", 128}, {"id", "disk"}, {"ellipsoidal", true}},
              {{"type", "random"}, {"dim", 2}, {"vertices", 7}, {"symmetric", false}, {"seed", 5},
               {"id", "rnd"}}};
  return c;
}

std::string csv(const Table& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

}  // namespace

TEST_CASE("row passing rules per comparison") {
  CHECK(make_row("e", "b", "c", 1.0, 1.0, 0.0, Comparison::le).passed);
  CHECK_FALSE(make_row("e", "b", "c", 1.1, 1.0, 0.05, Comparison::le).passed);
  CHECK(make_row("e", "b", "c", 0.96, 1.0, 0.05, Comparison::ge).passed);
  CHECK_FALSE(make_row("e", "b", "c", 0.9, 1.0, 0.05, Comparison::ge).passed);
  CHECK(make_row("e", "b", "c", 1.04, 1.0, 0.05, Comparison::eq).passed);
  CHECK_FALSE(make_row("e", "b", "c", 0.94, 1.0, 0.05, Comparison::eq).passed);
  CHECK(make_row("e", "b", "c", 1.1, 1.0, 0.05, Comparison::gt).passed);
  CHECK_FALSE(make_row("e", "b", "c", 1.04, 1.0, 0.05, Comparison::gt).passed);
  CHECK_FALSE(make_row("e", "b", "c", std::nan(""), 1.0, 0.05, Comparison::le).passed);
  const auto r = make_row("e", "b", "c", 3.0, 1.0, 0.5, Comparison::ge);
  CHECK(r.margin == 2.0);
}

TEST_CASE("csv layout and json mirror") {
  Table t = {make_row("petty", "b,1", "c", 0.1, 0.2, 0.3, Comparison::le)};
  const std::string s = csv(t);
  CHECK(s.rfind("experiment,body,check,value,reference,tolerance,margin,comparison,passed\n", 0) == 0);
  CHECK(s.find("\"b,1\"") != std::string::npos);
  CHECK(s.find("0.10000000000000001") != std::string::npos);
  const auto j = rows_to_json(t);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["body"] == "b,1");
  CHECK(j[0]["passed"] == true);
  CHECK(j[0]["comparison"] == "le");
}

TEST_CASE("rows sort by experiment order then body, stably") {
  Table t = {make_row("lemma_suite", "a", "1", 0, 0, 0, Comparison::eq),
             make_row("petty", "z", "1", 0, 0, 0, Comparison::eq),
             make_row("petty", "a", "2", 0, 0, 0, Comparison::eq),
             make_row("petty", "a", "1", 0, 0, 0, Comparison::eq)};
  sort_rows(t);
  CHECK(t[0].body == "a");
  CHECK(t[0].check == "2");
  CHECK(t[1].check == "1");
  CHECK(t[2].body == "z");
  CHECK(t[3].experiment == "lemma_suite");
}

TEST_CASE("loglog slope recovers a power law") {
  std::vector<double> x = {0.1, 0.2, 0.4, 0.8};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 1.5));
  CHECK(loglog_slope(x, y) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK_THROWS_AS(loglog_slope({1.0}, {1.0}), Error);
  CHECK_THROWS_AS(loglog_slope({1.0, 2.0}, {1.0, -1.0}), Error);
}

TEST_CASE("config parsing, defaults and validation") {
  const auto c = ExperimentConfig::from_json(
      {{"dim", 3}, {"phi", "power:4"}, {"seed", 9}, {"tolerances", {{"quad", 0.01}}}});
  CHECK(c.dim == 3);
  CHECK(c.grid() == 8192);
  CHECK(c.phi().exponent() == 4.0);
  CHECK(c.tol("quad") == 0.01);
  CHECK(c.tol("bm") == 1e-3);
  CHECK(ExperimentConfig{}.grid() == 4096);
  const auto back = ExperimentConfig::from_json(c.to_json());
  CHECK(back.seed == 9);
  CHECK(back.tol("quad") == 0.01);

  CHECK_THROWS_AS(ExperimentConfig::from_json({{"dim", 4}}), Error);
  CHECK_THROWS_AS(ExperimentConfig::from_json({{"tolerances", {{"quad", 0.0}}}}), Error);
  CHECK_THROWS_AS(ExperimentConfig::from_json({{"tolerances", {{"nonsense", 1.0}}}}), Error);
  CHECK_THROWS_AS(ExperimentConfig::from_json({{"phi", "power:0.5"}}), Error);
  CHECK_THROWS_AS(ExperimentConfig::from_json({{"grid", 3}}), Error);
}

TEST_CASE("corpus is seeded and dimension checked") {
  auto c = small_config();
  const auto a = build_corpus(c);
  const auto b = build_corpus(c);
  REQUIRE(a.size() == 3);
  CHECK(a[1].ellipsoidal);
  const auto& pa = std::get<Polytope>(a[2].body);
  const auto& pb = std::get<Polytope>(b[2].body);
  REQUIRE(pa.vertices().size() == pb.vertices().size());
  for (std::size_t i = 0; i < pa.vertices().size(); ++i) CHECK(pa.vertices()[i] == pb.vertices()[i]);

  c.dim = 3;
  CHECK_THROWS_AS(build_corpus(c), Error);
  CHECK(default_corpus(2).size() > 10);
  CHECK(random_corpus(2, 20, 1).size() == 20);
}

TEST_CASE("petty experiment on a small corpus") {
  const auto rows = exp_petty(small_config());
  CHECK(all_passed(rows));
  bool saw_known = false;
  for (const auto& r : rows) {
    if (r.check == "petty_known") {
      saw_known = true;
      CHECK(r.value == doctest::Approx(2.0).epsilon(1e-3));
    }
  }
  CHECK(saw_known);
}

TEST_CASE("experiments are bit-identical under a fixed seed") {
  const auto c = small_config();
  CHECK(csv(run_experiment("orlicz-ratio", c)) == csv(run_experiment("orlicz_ratio", c)));
  CHECK(csv(exp_lemma_suite(c)) == csv(exp_lemma_suite(c)));
}

TEST_CASE("orlicz ratio flags the strict gap only for non-ellipsoids") {
  const auto rows = exp_orlicz_ratio(small_config());
  CHECK(all_passed(rows));
  for (const auto& r : rows) {
    if (r.check == "strict_gap") CHECK(r.body != "disk");
  }
}

TEST_CASE("lemma suite reports an inadmissible phi instead of skipping") {
  auto c = small_config();
  c.phi_spec = orlicz::Phi::power(1.0).to_json();
  const auto rows = exp_lemma_suite(c);
  bool flagged = false;
  for (const auto& r : rows) flagged = flagged || (r.check == "same_sign_admissible" && !r.passed);
  CHECK(flagged);
  CHECK_FALSE(all_passed(rows));
}

TEST_CASE("unknown experiment names and planar-only experiments") {
  auto c = small_config();
  CHECK_THROWS_AS(run_experiment("nope", c), Error);
  c.dim = 3;
  c.corpus.clear();
  CHECK_THROWS_AS(exp_steiner_monotone(c), Error);
}
