#include <random>

#include "support.hpp"

#include "theta/scalar.hpp"

using namespace theta;

namespace {

ScalarValue P(const char* text) { return parse_scalar(text); }

TracePolynomial random_trace_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qe(-3, 3), ze(0, 2), ee(0, 2), co(-4, 4), n(1, 4);
  std::vector<TracePolynomial::Term> terms;
  const int count = n(rng);
  for (int i = 0; i < count; ++i) terms.emplace_back(Exponents{qe(rng), ze(rng), ee(rng)}, Rational(co(rng)));
  return TracePolynomial::from_terms(std::move(terms));
}

ScalarValue random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> qe(-3, 3), se(-3, 3), ee(-2, 2), co(-5, 5), n(1, 4), den(0, 2);
  std::vector<LaurentPoly::Term> terms;
  const int count = n(rng);
  for (int i = 0; i < count; ++i) terms.emplace_back(Exponents{qe(rng), se(rng), ee(rng)}, Rational(co(rng)) / (1 + (i % 3)));
  return ScalarValue(LaurentPoly::from_terms(std::move(terms)), den(rng), den(rng));
}

}  // namespace

TEST_CASE("ring operations") {
  const LaurentPoly q = laurent_q(), qi = laurent_q(-1);
  CHECK((q + qi) * (q - qi) == laurent_q(2) - laurent_q(-2));
  CHECK(laurent_s() * laurent_s() == laurent_s(2));
  CHECK(ScalarValue(LaurentPoly(1), 1, 0) + ScalarValue(1) == ScalarValue(LaurentPoly(1) + delta_poly(), 1, 0));
  CHECK(ScalarValue::lambda() == ScalarValue::s(2));
}

TEST_CASE("exact division") {
  auto r = exact_divide(laurent_q(2) - laurent_q(-2), DivideByDelta{});
  REQUIRE(r);
  CHECK(*r == laurent_q() + laurent_q(-1));
  auto w = exact_divide(LaurentPoly(1) - laurent_s(4), DivideByOmega{});
  REQUIRE(w);
  CHECK(*w == LaurentPoly(1) + laurent_s(2));
  CHECK_FALSE(exact_divide(laurent_q() + LaurentPoly(1), DivideByDelta{}));
  CHECK_FALSE(exact_divide(laurent_s(), DivideByOmega{}));
  CHECK(exact_divide(laurent_q(3) * Rational(6), DivideByMonomial{Rational(2), Exponents{1, 0, 0}}) ==
        laurent_q(2) * Rational(3));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = random_scalar(rng).num();
    auto d = exact_divide(p * delta_poly(), DivideByDelta{});
    auto o = exact_divide(p * omega_poly(), DivideByOmega{});
    REQUIRE(d);
    REQUIRE(o);
    CHECK(*d == p);
    CHECK(*o == p);
  }
}

TEST_CASE("substitute_z") {
  CHECK(substitute_z(TracePolynomial(1)) == ScalarValue(1));
  const TracePolynomial z = TracePolynomial::monomial(Rational(1), Exponents{0, 1, 0});
  CHECK(substitute_z(z) == ScalarValue(delta_poly() * laurent_E(), 0, 1));
  const TracePolynomial dq = TracePolynomial::monomial(Rational(1), {1, 0, 0}) - TracePolynomial::monomial(Rational(1), {-1, 0, 0});
  CHECK(substitute_z(TracePolynomial(1) + dq * z) ==
        ScalarValue(omega_poly() + delta_poly() * delta_poly() * laurent_E(), 0, 1));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const TracePolynomial a = random_trace_poly(rng), b = random_trace_poly(rng);
    CHECK(substitute_z(a * b) == substitute_z(a) * substitute_z(b));
    CHECK(substitute_z(a + b) == substitute_z(a) + substitute_z(b));
  }
}

TEST_CASE("specialize_E") {
  CHECK(ScalarValue::E().specialize_E(1) == ScalarValue(1));
  CHECK((ScalarValue::E(-1) - 1).specialize_E(Rational(1, 2)) == ScalarValue(1));
  CHECK(ScalarValue(laurent_E(), 1, 0).specialize_E(Rational(1, 3)) == ScalarValue(LaurentPoly(Rational(1, 3)), 1, 0));
  CHECK_THROWS(ScalarValue::E().specialize_E(0));

  std::mt19937_64 rng(13);
  for (int i = 0; i < 40; ++i) {
    const ScalarValue a = random_scalar(rng), b = random_scalar(rng);
    const Rational r(1 + i % 5, 2 + i % 3);
    CHECK((a * b).specialize_E(r) == a.specialize_E(r) * b.specialize_E(r));
    CHECK((a + b).specialize_E(r) == a.specialize_E(r) + b.specialize_E(r));
  }
}

TEST_CASE("equality and normal form") {
  CHECK(ScalarValue(delta_poly() * (laurent_q() + laurent_q(-1)), 1, 0) == ScalarValue(laurent_q(2) - laurent_q(-2), 1, 0));
  CHECK(ScalarValue() == ScalarValue(LaurentPoly(), 5, 0));
  CHECK(ScalarValue::q() != ScalarValue::q(-1));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    const ScalarValue a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(ScalarValue(a.num(), a.d_delta(), a.d_omega()) == a);
    CHECK(cross_equal(a * (b + c), a * b + a * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(cross_equal(a, a));
    CHECK(cross_equal(a + b, b + a) == (a + b == b + a));
  }
}

TEST_CASE("units, powers and mirror") {
  const ScalarValue mu = ScalarValue::mu();
  CHECK(mu * mu.inverse() == ScalarValue(1));
  CHECK(ScalarValue::capital_lambda() == ScalarValue::omega() * (ScalarValue::delta() * ScalarValue::E() * ScalarValue::s()).inverse());
  CHECK(ScalarValue::q(2).pow(-3) == ScalarValue::q(-6));
  CHECK_THROWS_AS((ScalarValue::q() + 1).inverse(), std::domain_error);
  CHECK(ScalarValue::delta().mirror() == -ScalarValue::delta());
  CHECK(ScalarValue::omega().mirror() == ScalarValue(1) - ScalarValue::s(-2));
  CHECK(mu.mirror() == mu);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    const ScalarValue a = random_scalar(rng), b = random_scalar(rng);
    CHECK((a * b).mirror() == a.mirror() * b.mirror());
    CHECK(a.mirror().mirror() == a);
  }
}

TEST_CASE("text parser") {
  CHECK(P("q^2 - q^-2") == ScalarValue::q(2) - ScalarValue::q(-2));
  CHECK(P("L") == ScalarValue::lambda());
  CHECK(P("lambda*(q^(-2) + q^2 - lambda)") == ScalarValue::lambda() * (ScalarValue::q(-2) + ScalarValue::q(2) - ScalarValue::lambda()));
  CHECK(P("mu") == ScalarValue::mu());
  CHECK(P("(s^-1 - s)/d") == ScalarValue::mu());
  CHECK(P("2E") == ScalarValue(2) * ScalarValue::E());
  CHECK(P("1/2") == ScalarValue(Rational(1, 2)));
  CHECK(P("-(q-1)^2") == -(ScalarValue::q() - 1) * (ScalarValue::q() - 1));
  CHECK_THROWS(P("q +"));
  CHECK_THROWS(P("1/(q+1)"));
  CHECK_THROWS(P("x"));
}

TEST_CASE("text and JSON round trips") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const ScalarValue v = random_scalar(rng);
    CHECK(parse_scalar(to_text(v)) == v);
    CHECK(scalar_from_json(nlohmann::json::parse(to_json(v).dump())) == v);
  }
  CHECK(to_text(ScalarValue()) == "0");
  const nlohmann::json j = to_json(ScalarValue(LaurentPoly(Rational(3, 2)), 1, 0));
  CHECK(j["d_delta"] == 1);
  CHECK(j["d_omega"] == 0);
  CHECK(j["num"][0]["c"] == "3/2");
}
