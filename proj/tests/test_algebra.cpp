#include <random>

#include "support.hpp"

#include "theta/algebra.hpp"
#include "theta/validate.hpp"

using namespace theta;

namespace {

TracePolynomial tp(int q, int z, int e, long c = 1) { return TracePolynomial::monomial(Rational(c), Exponents{q, z, e}); }

const TracePolynomial Z = tp(0, 1, 0);
const TracePolynomial E = tp(0, 0, 1);

TiePartition blocks(int n, std::vector<std::vector<int>> b) { return TiePartition::from_blocks(n, b); }

AlgebraElement iterated_power(int strands, int i, int r) {
  AlgebraElement acc = AlgebraElement::one(strands);
  BraidWord g;
  g.strands = strands;
  g.letters = {r >= 0 ? i : -i};
  const AlgebraElement step = inject(g);
  for (int k = 0; k < std::abs(r); ++k) acc = multiply(acc, step);
  return acc;
}

}  // namespace

TEST_CASE("inject") {
  const AlgebraElement a = inject(parse_braid("{1}"));
  CHECK(a == AlgebraElement::from_term(WordTerm{TiePartition(2), {1}}));
  AlgebraElement inv(2);
  inv.add(WordTerm{TiePartition(2), {1}}, TracePolynomial(1));
  inv.add(WordTerm{blocks(2, {{0, 1}}), {}}, -trace_delta());
  CHECK(inject(parse_braid("{-1}")) == inv);
  CHECK(inject(parse_braid("{}", 3)) == AlgebraElement::one(3));
}

TEST_CASE("tie_commute") {
  CHECK(tie_commute(blocks(3, {{0, 1}, {2}}), 2) == blocks(3, {{0, 2}, {1}}));
  CHECK(tie_commute(TiePartition(3), 1) == TiePartition(3));
  CHECK(tie_commute(blocks(3, {{0, 1, 2}}), 1) == blocks(3, {{0, 1, 2}}));
}

TEST_CASE("reduce_square") {
  AlgebraElement want(2);
  want.add(WordTerm{TiePartition(2), {}}, TracePolynomial(1));
  want.add(WordTerm{blocks(2, {{0, 1}}), {1}}, trace_delta());
  CHECK(reduce_square(WordTerm{TiePartition(2), {1, 1}}, 0) == want);

  AlgebraElement tied(2);
  tied.add(WordTerm{blocks(2, {{0, 1}}), {}}, TracePolynomial(1));
  tied.add(WordTerm{blocks(2, {{0, 1}}), {1}}, trace_delta());
  CHECK(reduce_square(WordTerm{blocks(2, {{0, 1}}), {1, 1}}, 0) == tied);

  // g^4 by two square reductions.
  AlgebraElement g4(2);
  const AlgebraElement once = reduce_square(WordTerm{TiePartition(2), {1, 1, 1, 1}}, 0);
  for (const auto& [t, c] : once.terms()) {
    if (t.word.size() >= 2) {
      g4 += reduce_square(t, t.word.size() - 2).scaled(c);
    } else {
      g4.add(t, c);
    }
  }
  CHECK(normal_form(g4) == normal_form(power_closed_form(2, 1, 4)));
  CHECK_THROWS(reduce_square(WordTerm{TiePartition(3), {1, 2}}, 0));
}

TEST_CASE("power_closed_form matches iterated products") {
  CHECK(power_closed_form(2, 1, 1) == inject(parse_braid("{1}")));
  CHECK(normal_form(power_closed_form(2, 1, 2)) == normal_form(reduce_square(WordTerm{TiePartition(2), {1, 1}}, 0)));
  CHECK(normal_form(power_closed_form(2, 1, -1)) == normal_form(inject(parse_braid("{-1}"))));
  for (int strands : {2, 3}) {
    for (int i = 1; i < strands; ++i) {
      for (int r = -6; r <= 6; ++r) {
        CAPTURE(r);
        CHECK(normal_form(power_closed_form(strands, i, r)) == normal_form(iterated_power(strands, i, r)));
      }
    }
  }
}

TEST_CASE("trace values") {
  CHECK(trace(parse_braid("{}", 1)) == TracePolynomial(1));
  CHECK(trace(parse_braid("{1}")) == Z);
  CHECK(trace(parse_braid("{1,1}")) == TracePolynomial(1) + trace_delta() * Z);
  CHECK(trace(parse_braid("{-1}")) == Z - trace_delta() * E);
  CHECK(trace(parse_braid("{}", 3)) == TracePolynomial(1));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& labels : set_partitions(n)) {
      const TiePartition p = TiePartition::from_labels(labels);
      CHECK(trace(AlgebraElement::from_term(WordTerm{p, {}})) == tp(0, 0, n - p.num_blocks()));
    }
  }
}

TEST_CASE("trace is a Markov trace") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 60; ++i) {
    const BraidWord w = random_braid(rng, 4, 10);
    const TracePolynomial t = trace(w);
    CHECK(trace(stabilize(w, 1)) == Z * t);
    CHECK(trace(stabilize(w, -1)) == (Z - trace_delta() * E) * t);
    if (!w.letters.empty()) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, w.letters.size() - 1)(rng);
      BraidWord rotated = w;
      std::rotate(rotated.letters.begin(), rotated.letters.begin() + static_cast<long>(k), rotated.letters.end());
      CHECK(trace(rotated) == t);
    }
  }
}

TEST_CASE("trace does not depend on the reduction order") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    const BraidWord w = random_braid(rng, 4, 9);
    const TracePolynomial t = trace(w);
    CAPTURE(to_string(w));
    CHECK(trace_rewrite(w) == t);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) CHECK(trace_rewrite(w, seed * 1000 + i) == t);
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    const BraidWord w = random_braid(rng, 5, 14);
    CHECK(trace(w, ExecutionPolicy::Serial) == trace(w, ExecutionPolicy::Parallel));
    CHECK(normal_form(w, ExecutionPolicy::Serial) == normal_form(w, ExecutionPolicy::Parallel));
  }
  const BraidWord long_word = parse_braid("{1, -2, -3, -4, 3, 3, -5, 4, -3, 2, -1, -3, -2, -4, 3, -2, -2, -2, 5, 4, -3}");
  CHECK(trace(long_word, ExecutionPolicy::Serial) == trace(long_word, ExecutionPolicy::Parallel));
}

TEST_CASE("set partitions") {
  CHECK(set_partitions(3).size() == 5);
  CHECK(bell(8) == 4140);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(5, 0) == 0);
  CHECK(TiePartition::from_labels({0, 0, 1}).to_string() == "{{1,2},{3}}");
}
