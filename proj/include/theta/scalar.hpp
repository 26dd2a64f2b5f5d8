#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "theta/poly.hpp"

namespace theta {

/// num / (delta^d_delta * omega^d_omega) with delta = q - q^-1 and
/// omega = 1 - s^2. Always held in normal form: no factor of delta (resp.
/// omega) can be cancelled, and zero has empty denominator. Since delta only
/// involves q and omega only s, the normal form is unique and structural
/// equality is equality of rational functions.
class ScalarValue {
 public:
  ScalarValue() = default;
  ScalarValue(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  ScalarValue(long c) : num_(c) {}             // NOLINT(google-explicit-constructor)
  ScalarValue(int c) : num_(c) {}              // NOLINT(google-explicit-constructor)
  explicit ScalarValue(LaurentPoly num, int d_delta = 0, int d_omega = 0);

  static ScalarValue q(int e = 1);
  static ScalarValue s(int e = 1);
  /// lambda = s^2
  static ScalarValue lambda(int e = 1);
  static ScalarValue E(int e = 1);
  static ScalarValue delta();
  static ScalarValue omega();
  /// mu = (s^-1 - s) / delta, the value added by a split unknot in P.
  static ScalarValue mu();
  /// Lambda = omega / (delta * E * s), the per-strand normalization.
  static ScalarValue capital_lambda();

  const LaurentPoly& num() const { return num_; }
  int d_delta() const { return d_delta_; }
  int d_omega() const { return d_omega_; }

  bool is_zero() const { return num_.is_zero(); }
  bool has_E() const;
  /// Empty denominator and only even powers of s (integral lambda powers).
  bool is_pure_laurent() const;

  ScalarValue operator-() const { return ScalarValue(-num_, d_delta_, d_omega_); }
  friend ScalarValue operator+(const ScalarValue& a, const ScalarValue& b);
  friend ScalarValue operator-(const ScalarValue& a, const ScalarValue& b) { return a + (-b); }
  friend ScalarValue operator*(const ScalarValue& a, const ScalarValue& b);
  ScalarValue& operator+=(const ScalarValue& o) { return *this = *this + o; }
  ScalarValue& operator-=(const ScalarValue& o) { return *this = *this - o; }
  ScalarValue& operator*=(const ScalarValue& o) { return *this = *this * o; }

  /// Structural equality of normal forms.
  bool operator==(const ScalarValue& o) const = default;

  /// Multiplicative inverse; only units of the ring (rational * monomial *
  /// delta^i * omega^j) are invertible. Throws std::domain_error otherwise.
  ScalarValue inverse() const;
  ScalarValue pow(int n) const;

  /// E := r (r != 0).
  ScalarValue specialize_E(const Rational& r) const;
  /// q -> q^-1, s -> s^-1, E fixed.
  ScalarValue mirror() const;

 private:
  void normalize();

  LaurentPoly num_;
  int d_delta_ = 0;
  int d_omega_ = 0;
};

/// Independent equality check by cross multiplication, used to validate the
/// normal form.
bool cross_equal(const ScalarValue& a, const ScalarValue& b);

/// z := delta * E / omega, term by term.
ScalarValue substitute_z(const TracePolynomial& t);

/// Lifts a trace polynomial without z to a scalar (q and E kept as is).
ScalarValue from_z_free(const TracePolynomial& t);

/// Text form: "num" or "(num) / (d^a * w^b)".
std::string to_text(const ScalarValue& v);

nlohmann::json to_json(const ScalarValue& v);
ScalarValue scalar_from_json(const nlohmann::json& j);

/// Parses an infix expression over q, s, E, L (= lambda = s^2), d (= delta),
/// w (= omega) and mu with + - * / ^, parentheses, rational literals and
/// implicit multiplication. Division is allowed by units only. Accepts the
/// output of to_text. Throws std::invalid_argument / std::domain_error.
ScalarValue parse_scalar(std::string_view text);

}  // namespace theta
