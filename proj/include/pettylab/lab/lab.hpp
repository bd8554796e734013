#pragma once

#include "pettylab/geometry/body.hpp"
#include "pettylab/orlicz/phi.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pettylab::lab {

/// Experiment parameters. Config file keys: dim, phi, grid, seed, corpus,
/// tolerances, output, format.
struct ExperimentConfig {
  int dim = 2;
  nlohmann::json phi_spec = {{"kind", "power"}, {"p", 2.0}};
  int grid_resolution = 0;  // 0: 4096 in the plane, 8192 in space
  /// Body-spec entries plus optional "id", "ellipsoidal", "family", "param",
  /// "expect" keys; {"type":"random","dim":n,"vertices":m,"symmetric":b,"seed":s}
  /// draws a seeded random polytope. Empty: default corpus for `dim`.
  std::vector<nlohmann::json> corpus;
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;
  std::string output_path;

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  orlicz::Phi phi() const { return orlicz::Phi::from_json(phi_spec); }
  int grid() const { return grid_resolution > 0 ? grid_resolution : (dim == 2 ? 4096 : 8192); }
  /// Named tolerance, falling back to the built-in default for the dimension.
  double tol(const std::string& name) const;
  /// Throws InvalidSpec on nonpositive tolerances or an unknown dimension.
  void validate() const;
};

/// Built-in tolerance defaults: quad, petty_equality, known, gl, inclusion,
/// lemma, slope, bm, stability_bm.
double default_tolerance(const std::string& name, int dim);

enum class Comparison { le, ge, eq, gt };
std::string to_string(Comparison c);

/// One assertion. margin = value - reference. Passing rule:
///   le: margin <= tolerance   ge: margin >= -tolerance
///   eq: |margin| <= tolerance gt: margin > tolerance
struct ResultRow {
  std::string experiment;
  std::string body;
  std::string check;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  double margin = 0.0;
  Comparison comparison = Comparison::le;
  bool passed = false;
};

ResultRow make_row(std::string experiment, std::string body, std::string check, double value,
                   double reference, double tolerance, Comparison cmp);

struct CorpusEntry {
  std::string id;
  Body body;
  bool ellipsoidal = false;
  std::string family;  // nested one-parameter family, ordered by param
  double param = 0.0;
  nlohmann::json expect;  // optional known values keyed by experiment
  nlohmann::json spec;
};

std::vector<CorpusEntry> build_corpus(const ExperimentConfig& config);
std::vector<nlohmann::json> default_corpus(int dim);
/// Random polygons for the Steiner experiments: `count` entries, seeded.
std::vector<nlohmann::json> random_corpus(int dim, int count, std::uint64_t seed);

using Table = std::vector<ResultRow>;

Table exp_petty(const ExperimentConfig& config);
Table exp_orlicz_ratio(const ExperimentConfig& config);
Table exp_steiner_monotone(const ExperimentConfig& config);
Table exp_example_cap(const ExperimentConfig& config);
Table exp_stability_sign(const ExperimentConfig& config);
Table exp_lemma_suite(const ExperimentConfig& config);

/// Names accepted by run_experiment, in run order.
const std::vector<std::string>& experiment_names();
/// One experiment by name, or every experiment for "all".
Table run_experiment(const std::string& name, const ExperimentConfig& config);

/// Stable order by (experiment, body).
void sort_rows(Table& rows);
void write_csv(std::ostream& out, const Table& rows);
void write_json(std::ostream& out, const Table& rows);
nlohmann::ordered_json rows_to_json(const Table& rows);
bool all_passed(const Table& rows);

/// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace pettylab::lab
