#include "theta/validate.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "theta/algebra.hpp"
#include "theta/catalog.hpp"
#include "theta/esystem.hpp"
#include "theta/published.hpp"

namespace theta {

namespace {

TracePolynomial trace_monomial(int q, int z, int e, long c = 1) {
  return TracePolynomial::monomial(Rational(c), Exponents{q, z, e});
}

CheckResult make(std::string name, bool ok, std::string detail = {}) {
  return CheckResult{std::move(name), ok, std::move(detail)};
}

// Runs `trial` for each sample; the result reports the first failure.
CheckResult sampled(const std::string& name, int samples,
                    const std::function<std::string(int)>& trial) {
  int passed = 0;
  std::string first_failure;
  for (int i = 0; i < samples; ++i) {
    std::string why;
    try {
      why = trial(i);
    } catch (const std::exception& ex) {
      why = std::string("exception: ") + ex.what();
    }
    if (why.empty()) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = "sample " + std::to_string(i) + ": " + why;
    }
  }
  std::string detail = std::to_string(passed) + "/" + std::to_string(samples);
  if (!first_failure.empty()) detail += "; " + first_failure;
  return make(name, passed == samples, detail);
}

std::string mismatch(const ScalarValue& got, const ScalarValue& want) {
  if (got == want) return {};
  return "got " + to_text(got) + ", expected " + to_text(want);
}

bool divisible_by_E_minus_one(const ScalarValue& v) {
  return exact_divide_binomial(v.num(), 2, 1, Rational(1), 0, Rational(-1)).has_value();
}

BraidWord random_knot(std::mt19937_64& rng, int max_strands, int max_length) {
  return random_braid_with_components(rng, max_strands, max_length, 1);
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

ScalarValue conway_residual(const BraidWord& w, std::size_t p, const std::function<ScalarValue(const BraidWord&)>& inv) {
  BraidWord plus = w;
  BraidWord minus = w;
  plus.letters[p] = std::abs(w.letters[p]);
  minus.letters[p] = -std::abs(w.letters[p]);
  return ScalarValue::s(-1) * inv(plus) - ScalarValue::s(1) * inv(minus) -
         ScalarValue::delta() * inv(smooth_crossing(w, p));
}

}  // namespace

BraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_length) {
  if (max_strands < 2) throw std::invalid_argument("random braids need at least 2 strands");
  BraidWord w;
  w.strands = std::uniform_int_distribution<int>(2, max_strands)(rng);
  const int len = std::uniform_int_distribution<int>(0, std::max(0, max_length))(rng);
  std::uniform_int_distribution<int> gen(1, w.strands - 1);
  std::bernoulli_distribution neg(0.5);
  for (int k = 0; k < len; ++k) {
    const int a = gen(rng);
    w.letters.push_back(neg(rng) ? -a : a);
  }
  return w;
}

BraidWord random_braid_with_components(std::mt19937_64& rng, int max_strands, int max_length, int count) {
  if (count > max_strands) throw std::invalid_argument("too many components for the strand bound");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    BraidWord w = random_braid(rng, max_strands, max_length);
    if (components(w).count == count) return w;
  }
  throw std::runtime_error("could not sample a braid with the requested component count");
}

std::vector<CheckResult> check_trace_values() {
  std::vector<CheckResult> out;
  const TracePolynomial z = trace_monomial(0, 1, 0);
  const TracePolynomial E = trace_monomial(0, 0, 1);
  const TracePolynomial d = trace_delta();
  auto tr_check = [&](const std::string& name, const std::string& braid, const TracePolynomial& want) {
    const TracePolynomial got = trace(parse_braid(braid));
    out.push_back(make("trace " + name, got == want, got.to_string()));
  };
  tr_check("sigma1 = z", "{1}", z);
  tr_check("sigma1^2 = 1 + delta z", "{1,1}", TracePolynomial(1) + d * z);
  tr_check("sigma1^-1 = z - delta E", "{-1}", z - d * E);

  bool ok = true;
  std::string detail;
  int count = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& labels : set_partitions(n)) {
      const TiePartition p = TiePartition::from_labels(labels);
      const TracePolynomial got = trace(AlgebraElement::from_term(WordTerm{p, {}}));
      const TracePolynomial want = trace_monomial(0, 0, n - p.num_blocks());
      ++count;
      if (got != want && ok) {
        ok = false;
        detail = "partition " + p.to_string() + " gave " + got.to_string();
      }
    }
  }
  out.push_back(make("trace of tie partitions = E^(n-m), n <= 6", ok,
                     ok ? std::to_string(count) + " partitions" : detail));
  return out;
}

std::vector<CheckResult> check_knot_values() {
  const Catalog cat = Catalog::builtin();
  std::vector<CheckResult> out;
  for (const auto& k : published_knots()) {
    const auto& e = cat.at(k.name);
    const ScalarValue got = homflypt(e.word());
    out.push_back(make("P(" + k.name + ") via " + e.braid, got == parse_scalar(k.homflypt),
                       mismatch(got, parse_scalar(k.homflypt))));
  }
  return out;
}

std::vector<CheckResult> check_external_values() {
  const Catalog cat = Catalog::builtin();
  std::vector<CheckResult> out;
  for (const auto& k : external_homflypt()) {
    const ScalarValue got = homflypt(cat.at(k.name).word());
    const ScalarValue want = parse_scalar(k.homflypt);
    out.push_back(make("P(" + k.name + ") reference value", got == want, mismatch(got, want)));
  }
  return out;
}

std::vector<CheckResult> check_appendix_values() {
  const Catalog cat = Catalog::builtin();
  std::vector<CheckResult> out;
  for (const auto& t : published_thetas()) {
    const ScalarValue got = theta_trace(cat.at(t.name).word());
    const ScalarValue want = parse_scalar(t.theta);
    std::string detail = mismatch(got, want);
    if (!t.reading.empty()) detail += (detail.empty() ? "" : "; ") + std::string("reading: ") + t.reading;
    out.push_back(make("Theta(" + t.name + ") symbolic E", got == want, detail));
  }
  return out;
}

std::vector<CheckResult> check_pair_differences() {
  const Catalog cat = Catalog::builtin();
  std::vector<CheckResult> out;
  for (const auto& p : published_differences()) {
    const std::string label = p.first + " vs " + p.second;
    const ComparisonReport r = compare(cat.at(p.first).word(), cat.at(p.second).word(), p.first, p.second);
    const ScalarValue want = parse_scalar(p.difference);
    out.push_back(make(label + ": difference formula", r.theta_difference == want, mismatch(r.theta_difference, want)));
    // Diagnostics for the formula check: the tabulated Theta values of the two
    // links, subtracted directly, and the formula read with the links swapped.
    const ScalarValue tabulated = parse_scalar(published_theta(p.first).theta) - parse_scalar(published_theta(p.second).theta);
    out.push_back(make(label + ": tabulated values give the computed difference", tabulated == r.theta_difference));
    out.push_back(make(label + ": printed formula equals Theta(second) - Theta(first)", r.theta_difference == -want));
    out.push_back(make(label + ": P-equal", r.p_equal && r.p_difference.is_zero()));
    out.push_back(make(label + ": divisible by E - 1", divisible_by_E_minus_one(r.theta_difference)));
    out.push_back(make(label + ": vanishes at E = 1", r.theta_difference.specialize_E(1).is_zero()));
    out.push_back(make(label + ": nonzero at E = 1/2 and 1/3",
                       !r.specializations.at("1/2").is_zero() && !r.specializations.at("1/3").is_zero()));
  }
  return out;
}

std::vector<CheckResult> check_engine_agreement(const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::vector<BraidWord> words;
  for (int i = 0; i < o.samples; ++i) words.push_back(random_braid(rng, o.max_strands, o.max_length));
  return {sampled("trace = skein = closed on random braids", o.samples, [&](int i) -> std::string {
    const BraidWord& w = words[static_cast<std::size_t>(i)];
    const ScalarValue a = theta_trace(w);
    const ScalarValue b = theta_skein(w);
    const ScalarValue c = theta_closed(w);
    if (a == b && b == c) return {};
    return to_string(w) + " on " + std::to_string(w.strands) + " strands: engines differ";
  })};
}

std::vector<CheckResult> check_markov_invariance(const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed + 1);
  return {sampled("Theta invariant under cycle, conjugate, stabilize(+/-)", o.samples, [&](int) -> std::string {
    // Keep one strand of headroom so a stabilization stays within the bound.
    const BraidWord w = random_braid(rng, std::max(2, o.max_strands - 1), o.max_length);
    BraidWord v = w;
    std::ostringstream moves;
    const int n_moves = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int m = 0; m < n_moves; ++m) {
      switch (pick(rng, 4)) {
        case 0:
          v = cycle(v);
          moves << "cycle ";
          break;
        case 1: {
          const int a = std::uniform_int_distribution<int>(1, v.strands - 1)(rng);
          const int letter = pick(rng, 2) ? a : -a;
          v = conjugate(v, letter);
          moves << "conjugate(" << letter << ") ";
          break;
        }
        case 2:
          v = stabilize(v, 1);
          moves << "stabilize(+) ";
          break;
        default:
          v = stabilize(v, -1);
          moves << "stabilize(-) ";
          break;
      }
    }
    if (theta(w) == theta(v)) return {};
    return to_string(w) + " changed under " + moves.str();
  })};
}

std::vector<CheckResult> check_structure(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(o.seed + 2);
  const int knot_samples = std::max(1, o.samples / 4);

  out.push_back(sampled("knots: Theta has no E and equals P", knot_samples, [&](int) -> std::string {
    const BraidWord w = random_knot(rng, o.max_strands, o.max_length);
    const ScalarValue t = theta_trace(w);
    if (t.has_E()) return to_string(w) + " has E";
    if (t != homflypt(w)) return to_string(w) + " differs from P";
    return {};
  }));

  out.push_back(sampled("k disjoint knots: Theta = E^(1-k) P, k = 2, 3", 20, [&](int i) -> std::string {
    const int k = 2 + i % 2;
    BraidWord w = random_knot(rng, 3, 6);
    for (int j = 1; j < k; ++j) w = disjoint_union(w, random_knot(rng, 3, 6));
    const ScalarValue want = ScalarValue::E(1 - k) * homflypt(w);
    for (Engine e : {Engine::Trace, Engine::Skein, Engine::Closed})
      if (theta(w, e) != want) return to_string(w) + " fails with engine " + engine_name(e);
    return {};
  }));

  out.push_back(sampled("split union: Theta = (mu/E) Theta(a) Theta(b)", 20, [&](int) -> std::string {
    const BraidWord a = random_braid(rng, 3, 6);
    const BraidWord b = random_braid(rng, 3, 6);
    const ScalarValue want = ScalarValue::mu() * ScalarValue::E(-1) * theta(a) * theta(b);
    return mismatch(theta_trace(disjoint_union(a, b)), want);
  }));

  out.push_back(sampled("two components: Theta = P + lambda^lk (1/E - 1) mu P(K1) P(K2)", 30,
                        [&](int) -> std::string {
                          const BraidWord w = random_braid_with_components(rng, o.max_strands, o.max_length, 2);
                          return two_component_decomposition_check(w) ? std::string() : to_string(w);
                        }));

  out.push_back(sampled("mixed crossings: s^-1 Theta(+) - s Theta(-) - delta Theta(0) = 0", 40,
                        [&](int) -> std::string {
                          BraidWord w;
                          std::vector<std::size_t> mixed;
                          while (mixed.empty()) {
                            w = random_braid(rng, o.max_strands, o.max_length);
                            mixed.clear();
                            for (std::size_t p = 0; p < w.letters.size(); ++p)
                              if (crossing_components(w, p).mixed()) mixed.push_back(p);
                          }
                          const std::size_t p = mixed[pick(rng, mixed.size())];
                          const ScalarValue r = conway_residual(w, p, [](const BraidWord& v) { return theta(v); });
                          if (r.is_zero()) return {};
                          return to_string(w) + " at " + std::to_string(p);
                        }));

  {
    // A self-crossing of the trefoil: the smoothing is a two-component link,
    // so the plain skein relation picks up E.
    const BraidWord w = parse_braid("{1,1,1}");
    const ScalarValue r = conway_residual(w, 0, [](const BraidWord& v) { return theta(v); });
    const bool ok = !r.is_zero() && r.has_E() && r.specialize_E(1).is_zero();
    out.push_back(make("self crossing of 3_1: plain skein relation fails for Theta", ok, "residual " + to_text(r)));
  }

  {
    const Catalog cat = Catalog::builtin();
    int good = 0;
    std::string bad;
    for (const auto& e : cat.entries()) {
      const BraidWord w = e.word();
      if (theta(mirror(w)) == theta(w).mirror()) {
        ++good;
      } else if (bad.empty()) {
        bad = e.name;
      }
    }
    const int total = static_cast<int>(cat.entries().size());
    out.push_back(make("mirror: q -> 1/q, s -> 1/s on the catalog", good == total,
                       std::to_string(good) + "/" + std::to_string(total) + (bad.empty() ? "" : "; first failure " + bad)));
  }

  out.push_back(sampled("connected sum of knots is multiplicative", 20, [&](int) -> std::string {
    const BraidWord a = random_knot(rng, 3, 6);
    const BraidWord b = random_knot(rng, 3, 6);
    return mismatch(theta_trace(connected_sum(a, b)), theta_trace(a) * theta_trace(b));
  }));
  return out;
}

std::vector<CheckResult> check_stirling() {
  std::vector<CheckResult> out;
  bool ok = true;
  for (int n = 1; n <= 8; ++n) {
    ScalarValue sum;
    for (int k = 1; k <= n; ++k) sum += ScalarValue(Rational(stirling(n, k))) * e_k(k);
    ok = ok && sum == ScalarValue::E(1 - n);
  }
  out.push_back(make("sum_k S(n,k) E_k = E^(1-n), n <= 8", ok));

  for (Engine e : {Engine::Trace, Engine::Skein, Engine::Closed}) {
    bool good = true;
    std::string detail;
    for (int n = 1; n <= 8 && good; ++n) {
      BraidWord w;
      w.strands = n;
      const ScalarValue want = (ScalarValue::mu() * ScalarValue::E(-1)).pow(n - 1);
      const ScalarValue got = theta(w, e);
      if (got != want) {
        good = false;
        detail = std::to_string(n) + "-unlink: " + mismatch(got, want);
      }
    }
    out.push_back(make("Theta(n-unlink) = (mu/E)^(n-1), n <= 8, engine " + engine_name(e), good, detail));
  }
  return out;
}

std::vector<CheckResult> check_esystem(const SuiteOptions& o) {
  using namespace esystem;
  const double tol = o.tolerance;
  std::vector<CheckResult> out;
  auto report = [&](const std::string& name, const Candidate& c, double want_e) {
    const double res = residual(c);
    const double err = std::abs(e_value(c) - Complex(want_e, 0.0));
    std::ostringstream detail;
    detail << "residual " << res << ", |e_value - " << want_e << "| = " << err;
    return make(name, verify(c, tol) && err < tol, detail.str());
  };

  for (int d = 1; d <= 8; ++d)
    for (int m = 0; m < d; ++m)
      out.push_back(report("singleton d=" + std::to_string(d) + " m=" + std::to_string(m), singleton(d, m), 1.0));
  for (int d = 1; d <= 8; ++d)
    out.push_back(report("trivial d=" + std::to_string(d), trivial(d), 1.0 / d));
  for (int d = 1; d <= 6; ++d) {
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      std::set<int> D;
      std::string label;
      for (int m = 0; m < d; ++m) {
        if (mask & (1u << m)) {
          D.insert(m);
          label += (label.empty() ? "" : ",") + std::to_string(m);
        }
      }
      out.push_back(report("subset d=" + std::to_string(d) + " D={" + label + "}", subset(d, D),
                           1.0 / static_cast<double>(D.size())));
    }
  }
  Candidate off;
  off.d = 3;
  off.x = {1.0, 0.5, 0.5};
  out.push_back(make("non-solution d=3 x=(0.5, 0.5) is rejected", !verify(off, tol)));
  return out;
}

std::vector<CheckResult> check_specializations(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(o.seed + 3);
  out.push_back(sampled("Homflypt skein relation at every crossing", 30, [&](int) -> std::string {
    const BraidWord w = random_braid(rng, o.max_strands, o.max_length);
    for (std::size_t p = 0; p < w.letters.size(); ++p) {
      const ScalarValue r = conway_residual(w, p, [](const BraidWord& v) { return homflypt(v); });
      if (!r.is_zero()) return to_string(w) + " at " + std::to_string(p);
    }
    return {};
  }));

  out.push_back(sampled("two components: Theta_d zero difference for one d >= 2 iff for all", 30,
                        [&](int) -> std::string {
                          const BraidWord a = random_braid_with_components(rng, o.max_strands, o.max_length, 2);
                          const BraidWord b = random_braid_with_components(rng, o.max_strands, o.max_length, 2);
                          const ScalarValue diff = theta(a) - theta(b);
                          const bool z2 = diff.specialize_E(Rational(1, 2)).is_zero();
                          for (int d = 3; d <= 6; ++d)
                            if (diff.specialize_E(Rational(1, d)).is_zero() != z2)
                              return to_string(a) + " vs " + to_string(b) + " at d=" + std::to_string(d);
                          return {};
                        }));

  const Catalog cat = Catalog::builtin();
  for (const auto& p : published_differences()) {
    const ScalarValue diff = theta(cat.at(p.first).word()) - theta(cat.at(p.second).word());
    bool ok = true;
    for (int d = 2; d <= 8; ++d) ok = ok && !diff.specialize_E(Rational(1, d)).is_zero();
    out.push_back(make(p.first + " vs " + p.second + ": Theta_d differs for 2 <= d <= 8", ok));
  }
  return out;
}

std::vector<std::string> laurent_form_notes() {
  std::vector<std::string> notes;
  const Catalog cat = Catalog::builtin();
  for (const auto& e : cat.entries()) {
    const ScalarValue t = theta(e.word());
    notes.push_back(e.name + ": " + (t.is_pure_laurent() ? "pure Laurent in q, lambda, E" : "needs s or a denominator"));
  }
  return notes;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& o) {
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  if (suite == "paper") {
    append(check_trace_values());
    append(check_knot_values());
    append(check_external_values());
    append(check_appendix_values());
    append(check_pair_differences());
    append(check_stirling());
  } else if (suite == "properties") {
    append(check_engine_agreement(o));
    append(check_markov_invariance(o));
    append(check_structure(o));
    append(check_specializations(o));
  } else if (suite == "esystem") {
    append(check_esystem(o));
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "' (expected paper, properties or esystem)");
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace theta
