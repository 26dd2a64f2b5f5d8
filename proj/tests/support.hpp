#pragma once

#include "doctest.h"

#include "theta/algebra.hpp"
#include "theta/scalar.hpp"

namespace doctest {

template <>
struct StringMaker<theta::ScalarValue> {
  static String convert(const theta::ScalarValue& v) { return theta::to_text(v).c_str(); }
};

template <>
struct StringMaker<theta::TracePolynomial> {
  static String convert(const theta::TracePolynomial& v) { return v.to_string().c_str(); }
};

template <>
struct StringMaker<theta::LaurentPoly> {
  static String convert(const theta::LaurentPoly& v) { return v.to_string().c_str(); }
};

}  // namespace doctest
