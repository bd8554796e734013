#include "pettylab/orlicz/phi.hpp"

#include "pettylab/error.hpp"

#include <algorithm>
#include <cmath>

namespace pettylab::orlicz {

namespace {

constexpr double kDiffStep = 1e-5;

double power_second(double p, double t) {
  if (p == 1.0) return 0.0;
  if (p == 2.0) return 2.0;
  return p * (p - 1.0) * std::pow(std::abs(t), p - 2.0);
}

}  // namespace

Phi Phi::power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidPhi, "power needs p >= 1");
  Phi f;
  f.kind_ = PhiKind::power;
  f.p_plus_ = f.p_minus_ = p;
  f.finish();
  return f;
}

Phi Phi::even_power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw Error(ErrorCode::InvalidPhi, "even_power needs p > 1");
  Phi f = power(p);
  f.kind_ = PhiKind::even_power;
  return f;
}

Phi Phi::asymmetric_power(double p_plus, double p_minus, double c) {
  if (!(p_plus >= 1.0) || !(p_minus >= 1.0) || !(c >= 0.0) || !std::isfinite(p_plus) ||
      !std::isfinite(p_minus) || !std::isfinite(c)) {
    throw Error(ErrorCode::InvalidPhi, "asymmetric_power needs exponents >= 1 and c >= 0");
  }
  Phi f;
  f.kind_ = PhiKind::asymmetric_power;
  f.p_plus_ = p_plus;
  f.p_minus_ = p_minus;
  f.c_ = c;
  f.finish();
  return f;
}

Phi Phi::table(std::vector<std::pair<double, double>> points) {
  if (points.size() < 2) throw Error(ErrorCode::InvalidPhi, "table needs at least two points");
  std::sort(points.begin(), points.end());
  Phi f;
  f.kind_ = PhiKind::table;
  bool has_origin = false;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [t, v] = points[i];
    if (!std::isfinite(t) || !std::isfinite(v)) throw Error(ErrorCode::InvalidPhi, "non-finite sample");
    if (i > 0 && t == points[i - 1].first) {
      throw Error(ErrorCode::InvalidPhi, "duplicate abscissa in table");
    }
    if (t == 0.0) {
      if (v != 0.0) throw Error(ErrorCode::InvalidPhi, "table must satisfy phi(0) = 0");
      has_origin = true;
    }
    f.ts_.push_back(t);
    f.vs_.push_back(v);
  }
  if (!has_origin) throw Error(ErrorCode::InvalidPhi, "table must contain t = 0");
  for (std::size_t i = 1; i + 1 < f.ts_.size(); ++i) {
    const double s0 = (f.vs_[i] - f.vs_[i - 1]) / (f.ts_[i] - f.ts_[i - 1]);
    const double s1 = (f.vs_[i + 1] - f.vs_[i]) / (f.ts_[i + 1] - f.ts_[i]);
    if (s1 < s0 - 1e-12 * std::max(1.0, std::abs(s0))) {
      throw Error(ErrorCode::InvalidPhi, "table slopes must be nondecreasing");
    }
  }
  f.validate_net();
  f.finish();
  return f;
}

Phi Phi::from_json(const nlohmann::json& spec) {
  try {
    const std::string kind = spec.at("kind").get<std::string>();
    if (kind == "power") return power(spec.at("p").get<double>());
    if (kind == "even_power") return even_power(spec.at("p").get<double>());
    if (kind == "asymmetric_power") {
      return asymmetric_power(spec.at("p_plus").get<double>(), spec.at("p_minus").get<double>(),
                              spec.value("c", 1.0));
    }
    if (kind == "table") {
      std::vector<std::pair<double, double>> pts;
      for (const auto& p : spec.at("points")) pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
      return table(std::move(pts));
    }
    throw Error(ErrorCode::InvalidPhi, "unknown phi kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidPhi, std::string("malformed phi spec: ") + e.what());
  }
}

Phi Phi::parse(const std::string& text) {
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidPhi, std::string("malformed phi spec: ") + e.what());
    }
    return from_json(j);
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidPhi, "expected kind:params, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  std::vector<double> args;
  std::size_t pos = colon + 1;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string piece = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      args.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidPhi, "bad number '" + piece + "' in phi spec");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if ((kind == "power" || kind == "even_power") && args.size() == 1) {
    return kind == "power" ? power(args[0]) : even_power(args[0]);
  }
  if (kind == "asymmetric_power" && (args.size() == 2 || args.size() == 3)) {
    return asymmetric_power(args[0], args[1], args.size() == 3 ? args[2] : 1.0);
  }
  throw Error(ErrorCode::InvalidPhi, "cannot parse phi spec '" + text + "'");
}

nlohmann::json Phi::to_json() const {
  switch (kind_) {
    case PhiKind::power: return {{"kind", "power"}, {"p", p_plus_}};
    case PhiKind::even_power: return {{"kind", "even_power"}, {"p", p_plus_}};
    case PhiKind::asymmetric_power:
      return {{"kind", "asymmetric_power"}, {"p_plus", p_plus_}, {"p_minus", p_minus_}, {"c", c_}};
    case PhiKind::table: {
      nlohmann::json pts = nlohmann::json::array();
      for (std::size_t i = 0; i < ts_.size(); ++i) pts.push_back({ts_[i], vs_[i]});
      return {{"kind", "table"}, {"points", pts}};
    }
  }
  return {};
}

std::string Phi::name() const {
  auto num = [](double x) {
    std::string s = nlohmann::json(x).dump();
    return s;
  };
  switch (kind_) {
    case PhiKind::power: return "power:" + num(p_plus_);
    case PhiKind::even_power: return "even_power:" + num(p_plus_);
    case PhiKind::asymmetric_power:
      return "asymmetric_power:" + num(p_plus_) + "," + num(p_minus_) + "," + num(c_);
    case PhiKind::table: return "table:" + std::to_string(ts_.size());
  }
  return "";
}

double Phi::operator()(double t) const {
  switch (kind_) {
    case PhiKind::power:
    case PhiKind::even_power: {
      const double a = std::abs(t);
      if (p_plus_ == 1.0) return a;
      if (p_plus_ == 2.0) return a * a;
      return std::pow(a, p_plus_);
    }
    case PhiKind::asymmetric_power:
      return t >= 0.0 ? std::pow(t, p_plus_) : c_ * std::pow(-t, p_minus_);
    case PhiKind::table: {
      const std::size_t m = ts_.size();
      std::size_t i;
      if (t <= ts_.front()) {
        i = 0;
      } else if (t >= ts_.back()) {
        i = m - 2;
      } else {
        i = static_cast<std::size_t>(std::upper_bound(ts_.begin(), ts_.end(), t) - ts_.begin()) - 1;
      }
      const double w = (t - ts_[i]) / (ts_[i + 1] - ts_[i]);
      return vs_[i] + w * (vs_[i + 1] - vs_[i]);
    }
  }
  return 0.0;
}

double Phi::second_derivative(double t) const {
  switch (kind_) {
    case PhiKind::power:
    case PhiKind::even_power: return power_second(p_plus_, t);
    case PhiKind::asymmetric_power:
      return t >= 0.0 ? power_second(p_plus_, t) : c_ * power_second(p_minus_, t);
    case PhiKind::table: break;
  }
  const double h = kDiffStep;
  return ((*this)(t + h) - 2.0 * (*this)(t) + (*this)(t - h)) / (h * h);
}

double Phi::min_second_derivative(double lo, double hi) const {
  if (kind_ != PhiKind::table) {
    // |t|^(p-2) is monotone on each half-line, so the minimum sits at an end.
    if (lo > 0.0 || hi < 0.0) return std::min(second_derivative(lo), second_derivative(hi));
  }
  double m = std::min(second_derivative(lo), second_derivative(hi));
  constexpr int kNet = 2000;
  for (int i = 1; i < kNet; ++i) m = std::min(m, second_derivative(lo + (hi - lo) * i / kNet));
  return m;
}

bool Phi::strictly_convex() const {
  switch (kind_) {
    case PhiKind::power:
    case PhiKind::even_power: return p_plus_ > 1.0;
    case PhiKind::asymmetric_power: return p_plus_ > 1.0 && p_minus_ > 1.0 && c_ > 0.0;
    case PhiKind::table: return false;
  }
  return false;
}

bool Phi::is_even() const {
  switch (kind_) {
    case PhiKind::power:
    case PhiKind::even_power: return true;
    case PhiKind::asymmetric_power: return p_plus_ == p_minus_ && c_ == 1.0;
    case PhiKind::table: {
      const std::size_t m = ts_.size();
      for (std::size_t i = 0; i < m; ++i) {
        if (ts_[i] != -ts_[m - 1 - i] || vs_[i] != vs_[m - 1 - i]) return false;
      }
      return true;
    }
  }
  return false;
}

void Phi::validate_net() const {
  const double reach = 2.0 * std::max(std::abs(ts_.front()), std::abs(ts_.back()));
  constexpr int kNet = 10000;
  std::vector<double> net(kNet + 1);
  for (int i = 0; i <= kNet; ++i) net[i] = -reach + 2.0 * reach * i / kNet;
  for (int i = 0; i <= kNet; ++i) {
    const double t = net[i];
    const double v = (*this)(t);
    if (v < 0.0) throw Error(ErrorCode::InvalidPhi, "phi is negative");
    if (t != 0.0 && !((*this)(-t) + v > 0.0)) {
      throw Error(ErrorCode::InvalidPhi, "phi(-t) + phi(t) vanishes for some t != 0");
    }
    if (i > 0) {
      const double prev = (*this)(net[i - 1]);
      if (t > 0.0 && v < prev - 1e-12) throw Error(ErrorCode::InvalidPhi, "phi decreases on [0, inf)");
      if (t <= 0.0 && v > prev + 1e-12) throw Error(ErrorCode::InvalidPhi, "phi increases on (-inf, 0]");
    }
  }
  for (int i = 0; i + 2 <= kNet; ++i) {
    for (int step : {1, 7, 97, 1000}) {
      if (i + 2 * step > kNet) continue;
      const double mid = (*this)(net[i + step]);
      const double avg = 0.5 * ((*this)(net[i]) + (*this)(net[i + 2 * step]));
      if (mid > avg + 1e-12) throw Error(ErrorCode::InvalidPhi, "phi is not convex");
    }
  }
}

void Phi::finish() {
  auto level = [this](double c) { return std::max((*this)(-c), (*this)(c)); };
  double hi = 1.0;
  int guard = 0;
  while (level(hi) < 1.0) {
    hi *= 2.0;
    if (++guard > 200) throw Error(ErrorCode::InvalidPhi, "phi stays below 1");
  }
  double lo = 0.0;
  while (hi - lo > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (level(mid) < 1.0 ? lo : hi) = mid;
  }
  c_phi_ = level(hi) == 1.0 ? hi : lo;
}

}  // namespace pettylab::orlicz
