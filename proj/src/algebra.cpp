#include "theta/algebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace theta {

namespace {

const TracePolynomial kZ = TracePolynomial::monomial(1, {0, 1, 0});
const TracePolynomial kE = TracePolynomial::monomial(1, {0, 0, 1});

Permutation word_permutation(int strands, const std::vector<int>& word) {
  Permutation p(strands);
  for (int j : word) p = p.times_generator(j);
  return p;
}

void check_generator(int strands, int i) {
  if (i < 1 || i >= strands)
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside [1, " +
                                std::to_string(strands - 1) + "]");
}

// Univariate q-polynomial division by q + q^-1; the caller guarantees
// exactness (numerators of the form q^m +- q^-m with the right parity).
TracePolynomial divide_by_q_plus_qinv(const std::map<int, Rational>& num) {
  std::map<int, Rational> rem = num;
  std::vector<TracePolynomial::Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const int t = top->first;
    const Rational c = top->second;
    if (rem.size() == 1) throw std::logic_error("inexact division by q + q^-1");
    quotient.emplace_back(Exponents{t - 1, 0, 0}, c);
    rem.erase(top);
    Rational& slot = rem[t - 2];
    slot -= c;
    if (slot == 0) rem.erase(t - 2);
  }
  return TracePolynomial::from_terms(std::move(quotient));
}

TracePolynomial q_binomial_ratio(int a, int sign) {
  // (q^a + sign * q^-a) / (q + q^-1)
  if (a == 0) {
    if (sign < 0) return {};
    throw std::logic_error("inexact division by q + q^-1");
  }
  std::map<int, Rational> num;
  num[a] += 1;
  num[-a] += sign;
  if (a < 0) {
    // q^a + s q^-a == s (q^-a + s q^a)
    return divide_by_q_plus_qinv({{-a, 1}, {a, sign}}).times_monomial(sign, {});
  }
  return divide_by_q_plus_qinv(num);
}

void accumulate(NormalForm& m, const BasisKey& k, const TracePolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void merge_into(NormalForm& out, NormalForm&& part) {
  if (out.empty()) {
    out = std::move(part);
    return;
  }
  for (auto& [k, c] : part) accumulate(out, k, c);
}

// Below this many entries the kernels stay on one thread.
constexpr std::size_t kParallelThreshold = 256;

// Applies fn(entry, emit) to every entry of `in` and sums what is emitted.
// The parallel version gives every thread its own accumulator and merges
// them at the end, so the result does not depend on the schedule.
template <class Fn>
NormalForm expand(const NormalForm& in, ExecutionPolicy policy, Fn&& fn) {
  std::vector<const NormalForm::value_type*> items;
  items.reserve(in.size());
  for (const auto& kv : in) items.push_back(&kv);
  const auto count = static_cast<std::ptrdiff_t>(items.size());

  NormalForm out;
  if (policy == ExecutionPolicy::Serial || items.size() < kParallelThreshold) {
    auto emit = [&](const BasisKey& k, const TracePolynomial& c) { accumulate(out, k, c); };
    for (std::ptrdiff_t idx = 0; idx < count; ++idx) fn(*items[idx], emit);
    return out;
  }

#pragma omp parallel
  {
    NormalForm local;
    auto emit = [&](const BasisKey& k, const TracePolynomial& c) { accumulate(local, k, c); };
#pragma omp for schedule(dynamic, 64) nowait
    for (std::ptrdiff_t idx = 0; idx < count; ++idx) fn(*items[idx], emit);
#pragma omp critical(theta_normal_form_merge)
    merge_into(out, std::move(local));
  }
  return out;
}

// Right multiplication of P*T_w by g_i^{sign}.
template <class Emit>
void times_letter(const BasisKey& key, const TracePolynomial& c, int i, bool inverse,
                  const TracePolynomial& delta, Emit&& emit) {
  const Permutation& w = key.perm;
  const bool ascent = w(i - 1) < w(i);
  BasisKey moved{key.ties, w.times_generator(i)};
  if (ascent && !inverse) {
    emit(moved, c);
  } else if (!ascent && inverse) {
    // T_w = T_{ws} g_i, so T_w g_i^-1 = T_{ws}.
    emit(moved, c);
  } else {
    // Ascent with g^-1 contributes -delta e; descent with g contributes +delta e.
    BasisKey tied{key.ties.join(w(i - 1), w(i)), w};
    emit(moved, c);
    emit(tied, inverse ? -(delta * c) : delta * c);
  }
}

NormalForm multiply_letters(NormalForm nf, const std::vector<int>& letters, ExecutionPolicy policy) {
  const TracePolynomial delta = trace_delta();
  for (int a : letters) {
    const int i = a > 0 ? a : -a;
    const bool inverse = a < 0;
    nf = expand(nf, policy, [&](const NormalForm::value_type& kv, auto& emit) {
      times_letter(kv.first, kv.second, i, inverse, delta, emit);
    });
  }
  return nf;
}

// One strand of the trace: rewrites a combination on n strands as one on
// n-1 strands with the same trace.
NormalForm strip_top(const NormalForm& level, int n, ExecutionPolicy policy) {
  const TracePolynomial delta = trace_delta();
  return expand(level, policy, [&](const NormalForm::value_type& kv, auto& emit) {
    const auto& [key, c] = kv;
    const TiePartition& P = key.ties;
    const Permutation& w = key.perm;
    const int top = n - 1;
    const int k = w.inverse()(top);

    if (k == top) {
      // The top strand runs straight through; it contributes E iff tied.
      BasisKey down{P.drop_top(), w.drop_top()};
      emit(down, P.is_singleton(top) ? c : c * kE);
      return;
    }

    // w = u o c with c = s_{n-1} ... s_{k+1} and u fixing the top strand, so
    // T_w = T_u g_{n-1} T_R with R = g_{n-2} ... g_{k+1}. Rotate T_R to the
    // front, then apply the Markov rule to g_{n-1}.
    Permutation u = w;
    for (int j = k + 1; j <= n - 1; ++j) u = u.times_generator(j);
    Permutation r(n);
    for (int j = n - 2; j >= k + 1; --j) r = r.times_generator(j);

    const TiePartition Q = P.image(r);
    TiePartition P2 = Q.isolate(top).drop_top();
    if (!Q.is_singleton(top)) {
      int b = 0;
      while (b == top || !Q.tied(b, top)) ++b;
      const Permutation x = r.compose(u);
      P2 = P2.join(x.inverse()(b), top - 1);
    }

    NormalForm local;
    local.emplace(BasisKey{P2, r.drop_top()}, c * kZ);
    const std::vector<int> tail = u.drop_top().reduced_word();
    for (int j : tail) {
      NormalForm next;
      for (const auto& [lk, lc] : local)
        times_letter(lk, lc, j, false, delta,
                     [&](const BasisKey& bk, const TracePolynomial& bc) { accumulate(next, bk, bc); });
      local = std::move(next);
    }
    for (const auto& [lk, lc] : local) emit(lk, lc);
  });
}

}  // namespace

TracePolynomial trace_delta() {
  return TracePolynomial::monomial(1, {1, 0, 0}) - TracePolynomial::monomial(1, {-1, 0, 0});
}

// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::one(int strands) {
  AlgebraElement a(strands);
  a.add(WordTerm{TiePartition(strands), {}}, 1);
  return a;
}

AlgebraElement AlgebraElement::from_term(WordTerm t, const TracePolynomial& c) {
  AlgebraElement a(t.ties.size());
  a.add(t, c);
  return a;
}

void AlgebraElement::add(const WordTerm& t, const TracePolynomial& c) {
  if (t.ties.size() != strands_) throw std::invalid_argument("term strand count mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

AlgebraElement AlgebraElement::scaled(const TracePolynomial& c) const {
  AlgebraElement r(strands_);
  for (const auto& [t, v] : terms_) r.add(t, v * c);
  return r;
}

AlgebraElement inject(const BraidWord& w) {
  validate(w);
  const TracePolynomial delta = trace_delta();
  AlgebraElement cur = AlgebraElement::one(w.strands);
  for (int a : w.letters) {
    AlgebraElement next(w.strands);
    const int i = a > 0 ? a : -a;
    for (const auto& [t, c] : cur.terms()) {
      WordTerm longer = t;
      longer.word.push_back(i);
      next.add(longer, c);
      if (a < 0) {
        const Permutation x = word_permutation(w.strands, t.word);
        next.add(WordTerm{t.ties.join(x(i - 1), x(i)), t.word}, -(delta * c));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

TiePartition tie_commute(const TiePartition& p, int i) {
  check_generator(p.size(), i);
  return p.swapped(i - 1, i);
}

AlgebraElement reduce_square(const WordTerm& t, std::size_t position) {
  const int n = t.ties.size();
  if (position + 1 >= t.word.size() || t.word[position] != t.word[position + 1])
    throw std::invalid_argument("no square at the given position");
  const int i = t.word[position];
  std::vector<int> prefix(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(position));
  std::vector<int> suffix(t.word.begin() + static_cast<std::ptrdiff_t>(position) + 2, t.word.end());

  AlgebraElement out(n);
  WordTerm plain{t.ties, prefix};
  plain.word.insert(plain.word.end(), suffix.begin(), suffix.end());
  out.add(plain, 1);

  const Permutation a = word_permutation(n, prefix);
  WordTerm tied{t.ties.join(a(i - 1), a(i)), prefix};
  tied.word.push_back(i);
  tied.word.insert(tied.word.end(), suffix.begin(), suffix.end());
  out.add(tied, trace_delta());
  return out;
}

AlgebraElement power_closed_form(int strands, int i, int r) {
  check_generator(strands, i);
  const TiePartition free(strands);
  const TiePartition tied = free.join(i - 1, i);
  const WordTerm g{free, {i}}, eg{tied, {i}}, e{tied, {}}, one{free, {}};

  AlgebraElement out(strands);
  if (r % 2 != 0) {
    // (1 - e) g + A e g + B e
    out.add(g, 1);
    out.add(eg, -1);
    out.add(eg, q_binomial_ratio(r, +1));
    out.add(e, q_binomial_ratio(r - 1, -1));
  } else {
    // 1 - e + A e g + B e
    out.add(one, 1);
    out.add(e, -1);
    out.add(eg, q_binomial_ratio(r, -1));
    out.add(e, q_binomial_ratio(r - 1, +1));
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  AlgebraElement out(a.strands());
  for (const auto& [ta, ca] : a.terms()) {
    const Permutation x = word_permutation(a.strands(), ta.word);
    for (const auto& [tb, cb] : b.terms()) {
      WordTerm t{ta.ties.join(tb.ties.image(x)), ta.word};
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      out.add(t, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

NormalForm normal_form(const BraidWord& w, ExecutionPolicy policy) {
  validate(w);
  NormalForm nf;
  nf.emplace(BasisKey{TiePartition(w.strands), Permutation(w.strands)}, TracePolynomial(1));
  return multiply_letters(std::move(nf), w.letters, policy);
}

NormalForm normal_form(const AlgebraElement& a, ExecutionPolicy policy) {
  NormalForm out;
  for (const auto& [t, c] : a.terms()) {
    NormalForm nf;
    nf.emplace(BasisKey{t.ties, Permutation(a.strands())}, c);
    merge_into(out, multiply_letters(std::move(nf), t.word, policy));
  }
  return out;
}

TracePolynomial trace(const NormalForm& nf, int strands, ExecutionPolicy policy) {
  NormalForm level = nf;
  for (int n = strands; n > 1; --n) level = strip_top(level, n, policy);
  TracePolynomial sum;
  for (const auto& [k, c] : level) sum += c;
  return sum;
}

TracePolynomial trace(const BraidWord& w, ExecutionPolicy policy) {
  return trace(normal_form(w, policy), w.strands, policy);
}

TracePolynomial trace(const AlgebraElement& a, ExecutionPolicy policy) {
  return trace(normal_form(a, policy), a.strands(), policy);
}

}  // namespace theta
