#include "theta/scalar.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace theta {

namespace {

// delta^k and omega^k are needed constantly when aligning denominators.
const LaurentPoly& cached_power(bool omega, int k) {
  thread_local std::vector<LaurentPoly> delta_pows{LaurentPoly(1)};
  thread_local std::vector<LaurentPoly> omega_pows{LaurentPoly(1)};
  auto& pows = omega ? omega_pows : delta_pows;
  while (static_cast<int>(pows.size()) <= k)
    pows.push_back(pows.back() * (omega ? omega_poly() : delta_poly()));
  return pows[static_cast<std::size_t>(k)];
}

LaurentPoly scale_denominator(const LaurentPoly& p, int delta_k, int omega_k) {
  LaurentPoly r = p;
  if (delta_k > 0) r *= cached_power(false, delta_k);
  if (omega_k > 0) r *= cached_power(true, omega_k);
  return r;
}

}  // namespace

ScalarValue::ScalarValue(LaurentPoly num, int d_delta, int d_omega)
    : num_(std::move(num)), d_delta_(d_delta), d_omega_(d_omega) {
  if (d_delta < 0 || d_omega < 0) throw std::invalid_argument("negative denominator exponent");
  normalize();
}

void ScalarValue::normalize() {
  if (num_.is_zero()) {
    d_delta_ = 0;
    d_omega_ = 0;
    return;
  }
  while (d_delta_ > 0) {
    auto quotient = exact_divide(num_, DivideByDelta{});
    if (!quotient) break;
    num_ = std::move(*quotient);
    --d_delta_;
  }
  while (d_omega_ > 0) {
    auto quotient = exact_divide(num_, DivideByOmega{});
    if (!quotient) break;
    num_ = std::move(*quotient);
    --d_omega_;
  }
}

ScalarValue ScalarValue::q(int e) { return ScalarValue(laurent_q(e)); }
ScalarValue ScalarValue::s(int e) { return ScalarValue(laurent_s(e)); }
ScalarValue ScalarValue::lambda(int e) { return ScalarValue(laurent_s(2 * e)); }
ScalarValue ScalarValue::E(int e) { return ScalarValue(laurent_E(e)); }
ScalarValue ScalarValue::delta() { return ScalarValue(delta_poly()); }
ScalarValue ScalarValue::omega() { return ScalarValue(omega_poly()); }

ScalarValue ScalarValue::mu() {
  // (s^-1 - s) / delta = s^-1 * omega / delta
  return ScalarValue(omega_poly() * laurent_s(-1), 1, 0);
}

ScalarValue ScalarValue::capital_lambda() {
  return ScalarValue(omega_poly() * LaurentPoly::monomial(1, {0, -1, -1}), 1, 0);
}

bool ScalarValue::has_E() const {
  for (const auto& t : num_.terms())
    if (t.first.c != 0) return true;
  return false;
}

bool ScalarValue::is_pure_laurent() const {
  if (d_delta_ != 0 || d_omega_ != 0) return false;
  for (const auto& t : num_.terms())
    if (t.first.b % 2 != 0) return false;
  return true;
}

ScalarValue operator+(const ScalarValue& a, const ScalarValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int dd = std::max(a.d_delta_, b.d_delta_);
  const int dw = std::max(a.d_omega_, b.d_omega_);
  LaurentPoly num = scale_denominator(a.num_, dd - a.d_delta_, dw - a.d_omega_) +
                    scale_denominator(b.num_, dd - b.d_delta_, dw - b.d_omega_);
  return ScalarValue(std::move(num), dd, dw);
}

ScalarValue operator*(const ScalarValue& a, const ScalarValue& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ScalarValue(a.num_ * b.num_, a.d_delta_ + b.d_delta_, a.d_omega_ + b.d_omega_);
}

ScalarValue ScalarValue::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  LaurentPoly p = num_;
  int i = 0;
  int j = 0;
  while (auto d = exact_divide(p, DivideByDelta{})) {
    p = std::move(*d);
    ++i;
  }
  while (auto d = exact_divide(p, DivideByOmega{})) {
    p = std::move(*d);
    ++j;
  }
  if (p.size() != 1) throw std::domain_error("not a unit: " + to_text(*this));
  const auto& [e, c] = p.terms().front();
  LaurentPoly inv = LaurentPoly::monomial(1 / c, Exponents{} - e);
  return ScalarValue(scale_denominator(inv, d_delta_, d_omega_), i, j);
}

ScalarValue ScalarValue::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  ScalarValue result(1);
  ScalarValue base = *this;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

ScalarValue ScalarValue::specialize_E(const Rational& r) const {
  if (r == 0) throw std::domain_error("E must be specialized to a nonzero value");
  const Rational inv = 1 / r;
  LaurentPoly num = num_.map_terms([&](const LaurentPoly::Term& t) {
    Rational factor = 1;
    const Rational& base = t.first.c >= 0 ? r : inv;
    for (int k = 0; k < std::abs(t.first.c); ++k) factor *= base;
    return LaurentPoly::Term{{t.first.a, t.first.b, 0}, t.second * factor};
  });
  return ScalarValue(std::move(num), d_delta_, d_omega_);
}

ScalarValue ScalarValue::mirror() const {
  // delta -> -delta and omega -> -s^-2 * omega.
  LaurentPoly num = num_.map_terms([](const LaurentPoly::Term& t) {
    return LaurentPoly::Term{{-t.first.a, -t.first.b, t.first.c}, t.second};
  });
  const int sign = (d_delta_ + d_omega_) % 2 == 0 ? 1 : -1;
  num = num.times_monomial(sign, {0, 2 * d_omega_, 0});
  return ScalarValue(std::move(num), d_delta_, d_omega_);
}

bool cross_equal(const ScalarValue& a, const ScalarValue& b) {
  return scale_denominator(a.num(), b.d_delta(), b.d_omega()) ==
         scale_denominator(b.num(), a.d_delta(), a.d_omega());
}

ScalarValue substitute_z(const TracePolynomial& t) {
  if (t.is_zero()) return {};
  const int max_z = t.degree_range(1).second;
  std::vector<LaurentPoly::Term> scratch;
  LaurentPoly num;
  // Common denominator omega^max_z.
  for (int j = 0; j <= max_z; ++j) {
    scratch.clear();
    for (const auto& [e, c] : t.terms())
      if (e.b == j) scratch.emplace_back(Exponents{e.a, 0, e.c + j}, c);
    if (scratch.empty()) continue;
    LaurentPoly part = LaurentPoly::from_terms(std::move(scratch));
    scratch = {};
    num += part * cached_power(false, j) * cached_power(true, max_z - j);
  }
  return ScalarValue(std::move(num), 0, max_z);
}

ScalarValue from_z_free(const TracePolynomial& t) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, c] : t.terms()) {
    if (e.b != 0) throw std::invalid_argument("trace polynomial contains z");
    terms.emplace_back(Exponents{e.a, 0, e.c}, c);
  }
  return ScalarValue(LaurentPoly::from_terms(std::move(terms)));
}

std::string to_text(const ScalarValue& v) {
  if (v.d_delta() == 0 && v.d_omega() == 0) return v.num().to_string();
  std::string den;
  if (v.d_delta() > 0) den = "d^" + std::to_string(v.d_delta());
  if (v.d_omega() > 0) {
    if (!den.empty()) den += " * ";
    den += "w^" + std::to_string(v.d_omega());
  }
  return "(" + v.num().to_string() + ") / (" + den + ")";
}

nlohmann::json to_json(const ScalarValue& v) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : v.num().terms())
    terms.push_back({{"c", to_string(c)}, {"q", e.a}, {"s", e.b}, {"E", e.c}});
  return {{"num", terms}, {"d_delta", v.d_delta()}, {"d_omega", v.d_omega()}};
}

ScalarValue scalar_from_json(const nlohmann::json& j) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j.at("num")) {
    terms.emplace_back(
        Exponents{t.at("q").get<int>(), t.at("s").get<int>(), t.at("E").get<int>()},
        parse_rational(t.at("c").get<std::string>()));
  }
  return ScalarValue(LaurentPoly::from_terms(std::move(terms)), j.at("d_delta").get<int>(),
                     j.at("d_omega").get<int>());
}

// ---------------------------------------------------------------------------
// Expression parser (recursive descent).

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ScalarValue parse() {
    ScalarValue v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_atom() {
    char c = peek();
    return c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  ScalarValue expr() {
    ScalarValue v;
    if (peek() == '-') {
      ++pos_;
      v = -term();
    } else {
      if (peek() == '+') ++pos_;
      v = term();
    }
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  ScalarValue term() {
    ScalarValue v = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        v *= unary().inverse();
      } else if (starts_atom()) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  ScalarValue unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  ScalarValue power() {
    ScalarValue base = atom();
    if (peek() == '^') {
      ++pos_;
      return base.pow(exponent());
    }
    return base;
  }

  int exponent() {
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return sign * e;
  }

  ScalarValue atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      ScalarValue v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return ScalarValue(parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "q") return ScalarValue::q();
      if (name == "s") return ScalarValue::s();
      if (name == "E") return ScalarValue::E();
      if (name == "L" || name == "lambda") return ScalarValue::lambda();
      if (name == "d") return ScalarValue::delta();
      if (name == "w") return ScalarValue::omega();
      if (name == "mu") return ScalarValue::mu();
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarValue parse_scalar(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace theta
