#include "pettylab/error.hpp"
#include "pettylab/lab/lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace pettylab::lab {

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::le: return "le";
    case Comparison::ge: return "ge";
    case Comparison::eq: return "eq";
    case Comparison::gt: return "gt";
  }
  return "?";
}

ResultRow make_row(std::string experiment, std::string body, std::string check, double value,
                   double reference, double tolerance, Comparison cmp) {
  ResultRow r;
  r.experiment = std::move(experiment);
  r.body = std::move(body);
  r.check = std::move(check);
  r.value = value;
  r.reference = reference;
  r.tolerance = tolerance;
  r.margin = value - reference;
  r.comparison = cmp;
  switch (cmp) {
    case Comparison::le: r.passed = r.margin <= tolerance; break;
    case Comparison::ge: r.passed = r.margin >= -tolerance; break;
    case Comparison::eq: r.passed = std::abs(r.margin) <= tolerance; break;
    case Comparison::gt: r.passed = r.margin > tolerance; break;
  }
  // NaN anywhere fails.
  if (std::isnan(r.margin) || std::isnan(tolerance)) r.passed = false;
  return r;
}

void sort_rows(Table& rows) {
  const auto& names = experiment_names();
  auto rank = [&](const std::string& e) {
    return std::find(names.begin(), names.end(), e) - names.begin();
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const ResultRow& a, const ResultRow& b) {
    const auto ra = rank(a.experiment);
    const auto rb = rank(b.experiment);
    if (ra != rb) return ra < rb;
    if (a.experiment != b.experiment) return a.experiment < b.experiment;
    return a.body < b.body;
  });
}

namespace {

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv(std::ostream& out, const Table& rows) {
  out << "experiment,body,check,value,reference,tolerance,margin,comparison,passed\n";
  for (const auto& r : rows) {
    out << csv_field(r.experiment) << ',' << csv_field(r.body) << ',' << csv_field(r.check) << ','
        << num(r.value) << ',' << num(r.reference) << ',' << num(r.tolerance) << ','
        << num(r.margin) << ',' << to_string(r.comparison) << ',' << (r.passed ? "true" : "false")
        << '\n';
  }
}

nlohmann::ordered_json rows_to_json(const Table& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  auto number = [](double x) -> nlohmann::ordered_json {
    if (std::isfinite(x)) return x;
    return nullptr;
  };
  for (const auto& r : rows) {
    arr.push_back({{"experiment", r.experiment},
                   {"body", r.body},
                   {"check", r.check},
                   {"value", number(r.value)},
                   {"reference", number(r.reference)},
                   {"tolerance", number(r.tolerance)},
                   {"margin", number(r.margin)},
                   {"comparison", to_string(r.comparison)},
                   {"passed", r.passed}});
  }
  return arr;
}

void write_json(std::ostream& out, const Table& rows) { out << rows_to_json(rows).dump(2) << '\n'; }

bool all_passed(const Table& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const ResultRow& r) { return r.passed; });
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::PreconditionViolated, "slope fit needs at least two points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw Error(ErrorCode::PreconditionViolated, "slope fit needs positive data");
    }
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = n * sxx - sx * sx;
  if (!(std::abs(den) > 0.0)) throw Error(ErrorCode::PreconditionViolated, "degenerate slope fit");
  return (n * sxy - sx * sy) / den;
}

}  // namespace pettylab::lab
