#include "pettylab/error.hpp"
#include "pettylab/lab/lab.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace pettylab;

namespace {

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidSpec, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidSpec, path + ": " + e.what());
  }
}

struct Flags {
  std::string config_path;
  int dim = 0;
  std::string phi;
  int grid = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
  std::vector<std::string> tols;
};

lab::ExperimentConfig make_config(const Flags& f) {
  nlohmann::json j = f.config_path.empty() ? nlohmann::json::object() : read_json_file(f.config_path);
  if (f.dim != 0) j["dim"] = f.dim;
  if (!f.phi.empty()) {
    j["phi"] = std::filesystem::is_regular_file(f.phi) ? read_json_file(f.phi)
                                                      : orlicz::Phi::parse(f.phi).to_json();
  }
  if (f.grid != 0) j["grid"] = f.grid;
  if (f.seed) j["seed"] = *f.seed;
  if (!f.out.empty()) j["output"] = f.out;
  for (const auto& t : f.tols) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidSpec, "--tol expects name=value");
    try {
      j["tolerances"][t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidSpec, "bad tolerance value in '" + t + "'");
    }
  }
  return lab::ExperimentConfig::from_json(j);
}

int run(const std::string& experiment, const Flags& flags) {
  const auto config = make_config(flags);
  const auto rows = lab::run_experiment(experiment, config);
  std::ofstream file;
  if (!config.output_path.empty()) {
    file.open(config.output_path);
    if (!file) throw Error(ErrorCode::InvalidSpec, "cannot write " + config.output_path);
  }
  std::ostream& out = config.output_path.empty() ? std::cout : file;
  if (flags.format == "json") {
    lab::write_json(out, rows);
  } else {
    lab::write_csv(out, rows);
  }
  int failures = 0;
  for (const auto& r : rows) {
    if (r.passed) continue;
    ++failures;
    std::cerr << "FAIL " << r.experiment << ' ' << r.body << ' ' << r.check << ": value "
              << r.value << ' ' << lab::to_string(r.comparison) << " reference " << r.reference
              << " (tolerance " << r.tolerance << ", margin " << r.margin << ")\n";
  }
  std::cerr << rows.size() - failures << '/' << rows.size() << " checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Petty projection inequality experiments"};
  Flags flags;
  app.add_option("--config", flags.config_path, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--dim", flags.dim, "Dimension")->check(CLI::IsMember({2, 3}));
  app.add_option("--phi", flags.phi, "phi spec (power:2, asymmetric_power:2,3,0.5, JSON or a file)");
  app.add_option("--grid", flags.grid, "Spherical grid resolution");
  app.add_option("--seed", flags.seed, "Seed for random corpora and directions");
  app.add_option("--out", flags.out, "Output path (default stdout)");
  app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", flags.tols, "Tolerance override name=value (repeatable)");
  app.require_subcommand(1);

  std::string chosen;
  const std::pair<const char*, const char*> subcommands[] = {
      {"petty", "Petty product V(Pi* K) V(K)^(n-1) against the ball bound"},
      {"orlicz-ratio", "V(Pi*_phi K)/V(K) against the ball, strict gaps, GL invariance"},
      {"steiner-monotone", "Steiner symmetral inclusion and polar volume monotonicity (n=2)"},
      {"example-cap", "Petty deficit of conv(B, +-(1+eps)v): slope fit and BM distance"},
      {"stability-sign", "Sign and trend of the Orlicz deficit against BM distance"},
      {"lemma-suite", "Seeded samples of the two scalar convexity gap bounds"},
      {"all", "Every experiment (steiner-monotone only in the plane)"},
  };
  for (const auto& [name, help] : subcommands) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([&chosen, name] { chosen = name; });
  }
  CLI11_PARSE(app, argc, argv);

  try {
    return run(chosen, flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
