#include "theta/poly.hpp"

#include <map>
#include <stdexcept>

namespace theta {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string monomial_text(const std::array<const char*, 3>& names, Exponents e) {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    int k = e[i];
    if (k == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

LaurentPoly laurent_q(int e) { return LaurentPoly::monomial(1, {e, 0, 0}); }
LaurentPoly laurent_s(int e) { return LaurentPoly::monomial(1, {0, e, 0}); }
LaurentPoly laurent_E(int e) { return LaurentPoly::monomial(1, {0, 0, e}); }

LaurentPoly delta_poly() { return laurent_q(1) - laurent_q(-1); }
LaurentPoly omega_poly() { return LaurentPoly(1) - laurent_s(2); }

namespace {

Exponents with_slot(Exponents e, std::size_t var, int value) {
  if (var == 0) e.a = value;
  if (var == 1) e.b = value;
  if (var == 2) e.c = value;
  return e;
}

}  // namespace

std::optional<LaurentPoly> exact_divide_binomial(const LaurentPoly& p, std::size_t var, int hi,
                                                 const Rational& lead, int lo,
                                                 const Rational& tail) {
  if (hi <= lo || lead == 0 || tail == 0) throw std::invalid_argument("bad binomial divisor");
  if (p.is_zero()) return LaurentPoly{};
  // Group by the two exponents not in `var`.
  std::map<Exponents, std::map<int, Rational>> groups;
  for (const auto& [e, c] : p.terms()) groups[with_slot(e, var, 0)][e[var]] = c;

  std::vector<LaurentPoly::Term> quotient;
  const int width = hi - lo;
  for (auto& [base, rem] : groups) {
    const int min_exp = rem.begin()->first;
    while (!rem.empty()) {
      auto top = std::prev(rem.end());
      const int t = top->first;
      // The lowest exponent of quotient*divisor would fall below min_exp.
      if (t - width < min_exp) return std::nullopt;
      Rational c = top->second / lead;
      const int k = t - hi;
      quotient.emplace_back(with_slot(base, var, k), c);
      rem.erase(top);
      Rational& slot = rem[k + lo];
      slot -= c * tail;
      if (slot == 0) rem.erase(k + lo);
    }
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, DivideByDelta) {
  return exact_divide_binomial(p, 0, 1, 1, -1, -1);
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, DivideByOmega) {
  // 1 - s^2 == -s^2 + 1
  return exact_divide_binomial(p, 1, 2, -1, 0, 1);
}

LaurentPoly exact_divide(const LaurentPoly& p, const DivideByMonomial& m) {
  if (m.coefficient == 0) throw std::domain_error("division by zero monomial");
  Rational inv = 1 / m.coefficient;
  return p.times_monomial(inv, Exponents{} - m.exponents);
}

}  // namespace theta
