#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

/// Exponent triple of a monomial in three variables. Ordered
/// lexicographically, which fixes the canonical term order.
struct Exponents {
  int a = 0;
  int b = 0;
  int c = 0;

  auto operator<=>(const Exponents&) const = default;

  constexpr Exponents operator+(const Exponents& o) const { return {a + o.a, b + o.b, c + o.c}; }
  constexpr Exponents operator-(const Exponents& o) const { return {a - o.a, b - o.b, c - o.c}; }
  constexpr int operator[](std::size_t i) const { return i == 0 ? a : (i == 1 ? b : c); }
};

struct LaurentVars {
  static constexpr std::array<const char*, 3> names{"q", "s", "E"};
  static constexpr bool nonnegative_tail = false;
};

struct TraceVars {
  static constexpr std::array<const char*, 3> names{"q", "z", "E"};
  // z and E only ever enter trace values through multiplication.
  static constexpr bool nonnegative_tail = true;
};

/// Sparse polynomial with rational coefficients in three variables. Terms are
/// kept sorted by exponent with no zero coefficients, so operator== is
/// mathematical equality.
template <class Vars>
class SparsePoly {
 public:
  using Term = std::pair<Exponents, Rational>;

  SparsePoly() = default;
  SparsePoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(Exponents{}, canonical(c));
  }
  SparsePoly(long c) : SparsePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  SparsePoly(int c) : SparsePoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static SparsePoly monomial(const Rational& c, Exponents e) {
    check_exponents(e);
    SparsePoly p;
    if (c != 0) p.terms_.emplace_back(e, canonical(c));
    return p;
  }

  /// Builds from arbitrary (possibly unsorted, duplicated, zero) terms.
  static SparsePoly from_terms(std::vector<Term> terms) {
    SparsePoly p;
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == Exponents{});
  }

  Rational coefficient(Exponents e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponents& k) { return t.first < k; });
    if (it != terms_.end() && it->first == e) return it->second;
    return 0;
  }

  bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(*this, o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(*this, o, true); }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(const SparsePoly& x, const SparsePoly& y) { return merge(x, y, false); }
  friend SparsePoly operator-(const SparsePoly& x, const SparsePoly& y) { return merge(x, y, true); }

  friend SparsePoly operator*(const SparsePoly& x, const SparsePoly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    if (y.terms_.size() == 1) return x.times_monomial(y.terms_[0].second, y.terms_[0].first);
    if (x.terms_.size() == 1) return y.times_monomial(x.terms_[0].second, x.terms_[0].first);
    std::vector<Term> out;
    out.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& [ex, cx] : x.terms_)
      for (const auto& [ey, cy] : y.terms_) out.emplace_back(ex + ey, cx * cy);
    return from_terms(std::move(out));
  }

  /// Multiplication by c * monomial(e); preserves term order.
  SparsePoly times_monomial(const Rational& c, Exponents e) const {
    if (c == 0) return {};
    SparsePoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_) {
      check_exponents(k + e);
      r.terms_.emplace_back(k + e, v * c);
    }
    return r;
  }

  SparsePoly pow(unsigned n) const {
    SparsePoly result(1);
    SparsePoly base = *this;
    while (n) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return result;
  }

  /// Maps every exponent through f and every coefficient through g, then
  /// re-canonicalizes. Used for substitutions that stay monomial.
  template <class F>
  SparsePoly map_terms(F&& f) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(f(t));
    return from_terms(std::move(out));
  }

  /// Lowest and highest exponent of variable `var` (0, 1, 2); poly must be nonzero.
  std::pair<int, int> degree_range(std::size_t var) const {
    int lo = terms_.front().first[var], hi = lo;
    for (const auto& t : terms_) {
      lo = std::min(lo, t.first[var]);
      hi = std::max(hi, t.first[var]);
    }
    return {lo, hi};
  }

  std::string to_string() const;

 private:
  static void check_exponents(const Exponents& e) {
    if constexpr (Vars::nonnegative_tail) {
      if (e.b < 0 || e.c < 0) throw std::domain_error("negative z/E exponent in trace polynomial");
    }
  }

  // mpq_class(n, d) is not reduced on construction.
  static Rational canonical(Rational c) {
    c.canonicalize();
    return c;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Exponents key = terms_[r].first;
      Rational sum = std::move(terms_[r].second);
      for (++r; r < terms_.size() && terms_[r].first == key; ++r) sum += terms_[r].second;
      sum.canonicalize();
      if (sum != 0) {
        check_exponents(key);
        terms_[w].first = key;
        terms_[w].second = std::move(sum);
        ++w;
      }
    }
    terms_.resize(w);
  }

  static SparsePoly merge(const SparsePoly& x, const SparsePoly& y, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(x.terms_.size() + y.terms_.size());
    auto i = x.terms_.begin();
    auto j = y.terms_.begin();
    while (i != x.terms_.end() || j != y.terms_.end()) {
      if (j == y.terms_.end() || (i != x.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == x.terms_.end() || j->first < i->first) {
        r.terms_.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
        ++j;
      } else {
        Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
        if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

/// Laurent polynomial in q, s (= sqrt(lambda)) and E.
using LaurentPoly = SparsePoly<LaurentVars>;
/// Markov trace values: Laurent in q, polynomial in z and E.
using TracePolynomial = SparsePoly<TraceVars>;

/// Renders a single monomial such as "q^-2*s*E^3" (empty string for 1).
std::string monomial_text(const std::array<const char*, 3>& names, Exponents e);

template <class Vars>
std::string SparsePoly<Vars>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_text(Vars::names, e);
    if (mono.empty()) {
      out += theta::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += theta::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named elements and exact division.

LaurentPoly laurent_q(int e = 1);
LaurentPoly laurent_s(int e = 1);
LaurentPoly laurent_E(int e = 1);
/// delta = q - q^-1
LaurentPoly delta_poly();
/// omega = 1 - s^2 (= 1 - lambda)
LaurentPoly omega_poly();

/// Divisors supported by exact_divide.
struct DivideByDelta {};
struct DivideByOmega {};
struct DivideByMonomial {
  Rational coefficient;
  Exponents exponents;
};

/// Exact division; std::nullopt means "not divisible" and is not an error.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, DivideByDelta);
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, DivideByOmega);
LaurentPoly exact_divide(const LaurentPoly& p, const DivideByMonomial& m);

/// Division by the binomial lead*x^hi + tail*x^lo in variable `var` (hi > lo),
/// carried out separately for every fixed choice of the other two exponents.
std::optional<LaurentPoly> exact_divide_binomial(const LaurentPoly& p, std::size_t var, int hi,
                                                 const Rational& lead, int lo,
                                                 const Rational& tail);

}  // namespace theta
