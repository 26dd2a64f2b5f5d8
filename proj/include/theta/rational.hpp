#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace theta {

// Exact rationals backed by GMP. mpq_class keeps values canonical after
// arithmetic; values built from strings are canonicalized by parse_rational.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" for integers, otherwise "p/q" with q > 0.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace theta
