#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace pettylab::orlicz {

enum class PhiKind { power, even_power, asymmetric_power, table };

/// A member of the class of convex functions phi >= 0 with phi(0) = 0 that are
/// monotone on both half-lines and positive on at least one side of every t != 0.
class Phi {
 public:
  /// |t|^p, p >= 1.
  static Phi power(double p);
  /// |t|^p with p > 1 (strictly convex and smooth away from 0).
  static Phi even_power(double p);
  /// t^p_plus for t >= 0, c*|t|^p_minus for t < 0; p_plus, p_minus >= 1, c >= 0.
  static Phi asymmetric_power(double p_plus, double p_minus, double c);
  /// Piecewise-linear interpolant of (t, phi) samples, extended linearly.
  /// Must contain (0, 0); validated on a 10^4-point net.
  static Phi table(std::vector<std::pair<double, double>> points);
  /// {"kind":"power","p":2} | {"kind":"even_power","p":2} |
  /// {"kind":"asymmetric_power","p_plus":2,"p_minus":2,"c":1} | {"kind":"table","points":[[t,v],...]}
  static Phi from_json(const nlohmann::json& spec);
  /// "power:2", "even_power:3", "asymmetric_power:2,3,0.5" or a JSON object.
  static Phi parse(const std::string& text);

  nlohmann::json to_json() const;
  std::string name() const;

  PhiKind kind() const { return kind_; }
  double operator()(double t) const;
  /// Closed form for power kinds, central differences (step 1e-5) for tables.
  double second_derivative(double t) const;
  /// min phi'' over [lo, hi].
  double min_second_derivative(double lo, double hi) const;

  /// The c > 0 with max{phi(-c), phi(c)} = 1.
  double c_phi() const { return c_phi_; }
  bool strictly_convex() const;
  bool is_even() const;
  /// power(p) or even_power(p); exponent() gives p.
  bool is_power() const { return kind_ == PhiKind::power || kind_ == PhiKind::even_power; }
  double exponent() const { return p_plus_; }

 private:
  Phi() = default;
  void finish();
  void validate_net() const;

  PhiKind kind_ = PhiKind::power;
  double p_plus_ = 1.0;
  double p_minus_ = 1.0;
  double c_ = 1.0;
  std::vector<double> ts_;
  std::vector<double> vs_;
  double c_phi_ = 1.0;
};

}  // namespace pettylab::orlicz
