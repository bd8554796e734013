#include "pettylab/error.hpp"
#include "pettylab/geometry/shapes.hpp"
#include "pettylab/lab/lab.hpp"

#include <cmath>
#include <cstdio>

namespace pettylab::lab {

using nlohmann::json;

double default_tolerance(const std::string& name, int dim) {
  if (name == "quad") return dim == 2 ? 1e-4 : 3e-4;  // relative radial quadrature error
  if (name == "petty_equality") return dim == 2 ? 0.01 : 0.02;
  if (name == "known") return 1e-3;
  if (name == "gl") return 1e-3;
  if (name == "inclusion") return 1e-8;
  if (name == "lemma") return 1e-9;
  if (name == "slope") return 0.3;
  if (name == "bm") return 1e-3;
  if (name == "stability_bm") return 0.01;
  throw Error(ErrorCode::InvalidSpec, "unknown tolerance '" + name + "'");
}

double ExperimentConfig::tol(const std::string& name) const {
  const auto it = tolerances.find(name);
  return it != tolerances.end() ? it->second : default_tolerance(name, dim);
}

void ExperimentConfig::validate() const {
  if (dim != 2 && dim != 3) throw Error(ErrorCode::InvalidSpec, "dim must be 2 or 3");
  if (grid_resolution != 0 && grid_resolution < 16) {
    throw Error(ErrorCode::InvalidSpec, "grid resolution must be >= 16");
  }
  for (const auto& [name, value] : tolerances) {
    default_tolerance(name, dim);  // rejects unknown names
    if (!(value > 0.0)) throw Error(ErrorCode::InvalidSpec, "tolerance '" + name + "' must be positive");
  }
  phi();
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  try {
    c.dim = j.value("dim", 2);
    if (j.contains("phi")) {
      const auto& p = j.at("phi");
      c.phi_spec = p.is_string() ? orlicz::Phi::parse(p.get<std::string>()).to_json() : p;
    }
    c.grid_resolution = j.value("grid", 0);
    c.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("corpus")) {
      for (const auto& e : j.at("corpus")) c.corpus.push_back(e);
    }
    if (j.contains("tolerances")) {
      for (const auto& [k, v] : j.at("tolerances").items()) c.tolerances[k] = v.get<double>();
    }
    c.output_path = j.value("output", std::string{});
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidSpec, std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

json ExperimentConfig::to_json() const {
  json tol = json::object();
  for (const auto& [k, v] : tolerances) tol[k] = v;
  return {{"dim", dim},       {"phi", phi_spec}, {"grid", grid()},      {"seed", seed},
          {"corpus", corpus}, {"tolerances", tol}, {"output", output_path}};
}

namespace {

json polygon_spec(const std::vector<std::array<double, 2>>& pts) {
  json v = json::array();
  for (const auto& p : pts) v.push_back({p[0], p[1]});
  return {{"type", "polytope"}, {"dim", 2}, {"vertices", v}};
}

json with(json spec, const std::string& id, bool ellipsoidal = false) {
  spec["id"] = id;
  if (ellipsoidal) spec["ellipsoidal"] = true;
  return spec;
}

json family(json spec, const std::string& id, const std::string& name, double param) {
  spec["id"] = id;
  spec["family"] = name;
  spec["param"] = param;
  return spec;
}

std::string fixed(double x, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

// conv(B^2, s(+-1, +-1)): a disk with four corners.
json corner_body(double s) {
  std::vector<std::array<double, 2>> pts;
  constexpr int kRes = 256;
  for (int i = 0; i < kRes; ++i) {
    const double a = 2.0 * kPi * (i + 0.5) / kRes;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  for (double x : {-s, s}) {
    for (double y : {-s, s}) pts.push_back({x, y});
  }
  return polygon_spec(pts);
}

}  // namespace

std::vector<json> random_corpus(int dim, int count, std::uint64_t seed) {
  std::vector<json> out;
  for (int i = 0; i < count; ++i) {
    out.push_back({{"type", "random"},
                   {"dim", dim},
                   {"vertices", 5 + i % 6},
                   {"symmetric", i % 3 == 0},
                   {"seed", seed * 1000 + static_cast<std::uint64_t>(i)},
                   {"id", "random-" + std::to_string(i)}});
  }
  return out;
}

std::vector<json> default_corpus(int dim) {
  std::vector<json> c;
  if (dim == 2) {
    c.push_back(with({{"type", "ball"}, {"dim", 2}, {"resolution", 64}}, "disk-64", true));
    c.push_back(with({{"type", "ball"}, {"dim", 2}, {"resolution", 256}}, "disk-256", true));
    c.push_back(with({{"type", "ellipsoid"}, {"dim", 2}, {"semi_axes", {2.0, 1.0}}, {"resolution", 256}},
                     "ellipse-2x1", true));
    json sq = with(polygon_spec({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}), "square");
    sq["expect"] = {{"petty", 2.0}};
    c.push_back(sq);
    c.push_back(with(polygon_spec({{-1.7, -1}, {0.3, -1}, {1.7, 1}, {-0.3, 1}}), "square-sheared"));
    c.push_back(with(polygon_spec({{-2, -1}, {2, -1}, {2, 1}, {-2, 1}}), "box-2x1"));
    c.push_back(with(polygon_spec({{-1, -1}, {2, -1}, {-1, 2}}), "triangle"));
    c.push_back(with(polygon_spec({{1, 0}, {0.5, 0.866}, {-0.5, 0.866}, {-1, 0}, {-0.5, -0.866},
                                   {0.5, -0.866}}),
                     "hexagon"));
    for (int i = 0; i < 3; ++i) {
      c.push_back({{"type", "random"}, {"dim", 2}, {"vertices", 8 + 4 * i}, {"symmetric", true},
                   {"seed", 101 + i}, {"id", "random-sym-" + std::to_string(i)}});
    }
    for (int i = 0; i < 2; ++i) {
      c.push_back({{"type", "random"}, {"dim", 2}, {"vertices", 6 + 3 * i}, {"symmetric", false},
                   {"seed", 201 + i}, {"id", "random-" + std::to_string(i)}});
    }
    for (double eps : {0.05, 0.1, 0.2, 0.4}) {
      c.push_back(family({{"type", "cap_ball"}, {"dim", 2}, {"eps", eps}, {"resolution", 256}},
                         "cap-" + fixed(eps, 2), "cap", eps));
    }
    for (double s : {0.75, 0.8, 0.9, 1.0}) {
      c.push_back(family(corner_body(s), "corner-" + fixed(s, 2), "corner", s));
    }
  } else {
    c.push_back(with({{"type", "ball"}, {"dim", 3}, {"resolution", 500}}, "ball-500", true));
    c.push_back(with({{"type", "ball"}, {"dim", 3}, {"resolution", 2000}}, "ball-2000", true));
    c.push_back(with({{"type", "ellipsoid"}, {"dim", 3}, {"semi_axes", {2.0, 1.0, 0.5}},
                      {"resolution", 2000}},
                     "ellipsoid-2x1x0.5", true));
    json cube = {{"type", "polytope"},
                 {"dim", 3},
                 {"vertices", {{-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
                               {-1, -1, 1}, {1, -1, 1}, {1, 1, 1}, {-1, 1, 1}}}};
    cube = with(cube, "cube");
    cube["expect"] = {{"petty", 4.0 / 3.0}};
    c.push_back(cube);
    c.push_back(with({{"type", "polytope"},
                      {"dim", 3},
                      {"vertices", {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}}},
                     "octahedron"));
    c.push_back(with({{"type", "polytope"},
                      {"dim", 3},
                      {"vertices", {{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}}},
                     "simplex"));
    for (int i = 0; i < 2; ++i) {
      c.push_back({{"type", "random"}, {"dim", 3}, {"vertices", 20 + 10 * i}, {"symmetric", true},
                   {"seed", 301 + i}, {"id", "random-sym-" + std::to_string(i)}});
    }
    c.push_back({{"type", "random"}, {"dim", 3}, {"vertices", 16}, {"symmetric", false},
                 {"seed", 401}, {"id", "random-0"}});
    for (double eps : {0.1, 0.2, 0.4}) {
      c.push_back(family({{"type", "cap_ball"}, {"dim", 3}, {"eps", eps}, {"resolution", 1000}},
                         "cap-" + fixed(eps, 2), "cap", eps));
    }
  }
  return c;
}

std::vector<CorpusEntry> build_corpus(const ExperimentConfig& config) {
  const auto specs = config.corpus.empty() ? default_corpus(config.dim) : config.corpus;
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const json& s = specs[i];
    const std::string id = s.value("id", "body-" + std::to_string(i));
    auto make_body = [&]() -> Body {
      try {
        if (s.value("type", std::string{}) == "random") {
          const int n = s.at("dim").get<int>();
          if (n != 2 && n != 3) throw Error(ErrorCode::InvalidSpec, "dim must be 2 or 3");
          Rng rng(s.value("seed", config.seed));
          return random_polytope(n, s.value("vertices", 8), s.value("symmetric", false), rng);
        }
        return parse_body_spec(s);
      } catch (const json::exception& ex) {
        throw Error(ErrorCode::InvalidSpec, "corpus entry '" + id + "': " + ex.what());
      }
    };
    CorpusEntry e{id,
                  make_body(),
                  s.value("ellipsoidal", false),
                  s.value("family", std::string{}),
                  s.value("param", 0.0),
                  s.value("expect", json::object()),
                  s};
    if (dim(e.body) != config.dim) {
      throw Error(ErrorCode::InvalidSpec, "corpus entry '" + id + "' has the wrong dimension");
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace pettylab::lab
