// Reference trace engine working on words rather than on the permutation
// basis. It is slow and kept for cross-checking: the main engine and this one
// share nothing beyond the tie-partition and permutation types.

#include <map>
#include <random>
#include <stdexcept>

#include "theta/algebra.hpp"

namespace theta {

namespace {

Permutation perm_of(int n, const std::vector<int>& word, std::size_t from, std::size_t to) {
  Permutation p(n);
  for (std::size_t k = from; k < to; ++k) p = p.times_generator(word[k]);
  return p;
}

std::vector<std::size_t> positions_of(const std::vector<int>& word, int letter) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < word.size(); ++k)
    if (word[k] == letter) out.push_back(k);
  return out;
}

// tr(P A B) = tr(b(P) B A) where A is the first k letters.
WordTerm rotate(const WordTerm& t, std::size_t k) {
  const int n = t.ties.size();
  WordTerm r;
  r.ties = t.ties.image(perm_of(n, t.word, k, t.word.size()));
  r.word.assign(t.word.begin() + static_cast<std::ptrdiff_t>(k), t.word.end());
  r.word.insert(r.word.end(), t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

WordTerm canonical_rotation(const WordTerm& t) {
  WordTerm best = t;
  for (std::size_t k = 1; k < t.word.size(); ++k) {
    WordTerm r = rotate(t, k);
    if (r < best) best = std::move(r);
  }
  return best;
}

// Replaces word[pos, pos+len) by the combination `local`, whose tie
// partitions act at that position and are pushed to the left end.
void splice(const WordTerm& t, std::size_t pos, std::size_t len, const AlgebraElement& local,
            const TracePolynomial& scale, AlgebraElement& out) {
  const int n = t.ties.size();
  const Permutation prefix = perm_of(n, t.word, 0, pos);
  for (const auto& [lt, lc] : local.terms()) {
    WordTerm r;
    r.ties = t.ties.join(lt.ties.image(prefix));
    r.word.assign(t.word.begin(), t.word.begin() + static_cast<std::ptrdiff_t>(pos));
    r.word.insert(r.word.end(), lt.word.begin(), lt.word.end());
    r.word.insert(r.word.end(), t.word.begin() + static_cast<std::ptrdiff_t>(pos + len), t.word.end());
    out.add(r, lc * scale);
  }
}

class RewriteEngine {
 public:
  explicit RewriteEngine(std::optional<std::uint64_t> seed) {
    if (seed) rng_.emplace(*seed);
  }

  TracePolynomial trace_term(const WordTerm& t) {
    const int n = t.ties.size();
    if (n == 1) return 1;
    const WordTerm key = canonical_rotation(t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TracePolynomial value = evaluate(rng_ ? t : key);
    memo_.emplace(key, value);
    return value;
  }

 private:
  std::size_t pick(std::size_t count) {
    if (!rng_ || count <= 1) return 0;
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(*rng_);
  }

  TracePolynomial sum_traces(const AlgebraElement& a) {
    TracePolynomial sum;
    for (const auto& [t, c] : a.terms()) sum += c * trace_term(t);
    return sum;
  }

  TracePolynomial evaluate(const WordTerm& t) {
    const int n = t.ties.size();
    const int top = n - 1;       // top strand, 0-based
    const int top_gen = n - 1;   // g_{n-1} is the only generator touching it
    const auto tops = positions_of(t.word, top_gen);

    if (tops.empty()) {
      const TracePolynomial rest = trace_term(WordTerm{t.ties.drop_top(), t.word});
      return t.ties.is_singleton(top) ? rest : rest * TracePolynomial::monomial(1, {0, 0, 1});
    }

    std::vector<std::size_t> squares;
    for (std::size_t k = 0; k + 1 < t.word.size(); ++k)
      if (t.word[k] == t.word[k + 1]) squares.push_back(k);
    if (!squares.empty() && (!rng_ || pick(2) == 0))
      return sum_traces(reduce_square(t, squares[pick(squares.size())]));

    if (tops.size() == 1) {
      const WordTerm r = rotate(t, tops.front() + 1);
      // r = P' A g_{n-1}, A free of the top generator.
      std::vector<int> a(r.word.begin(), r.word.end() - 1);
      TiePartition down = r.ties.isolate(top).drop_top();
      if (!r.ties.is_singleton(top)) {
        int b = 0;
        while (b == top || !r.ties.tied(b, top)) ++b;
        const Permutation x = perm_of(n, a, 0, a.size());
        down = down.join(x.inverse()(b), top - 1);
      }
      return TracePolynomial::monomial(1, {0, 1, 0}) * trace_term(WordTerm{down, a});
    }

    const WordTerm r = rotate(t, tops[pick(tops.size())]);
    return sum_traces(reduce_level(r, top_gen));
  }

  // Rewrites t (letters <= level) into terms using g_level at most once.
  AlgebraElement reduce_level(const WordTerm& t, int level) {
    const int n = t.ties.size();
    const auto occ = positions_of(t.word, level);
    AlgebraElement out(n);
    if (occ.size() < 2) {
      out.add(t, 1);
      return out;
    }
    const std::size_t j = pick(occ.size() - 1);
    const std::size_t i = occ[j], k = occ[j + 1];
    const std::vector<int> between(t.word.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                   t.word.begin() + static_cast<std::ptrdiff_t>(k));
    const TiePartition free(n);
    const TracePolynomial delta = trace_delta();

    AlgebraElement step(n);
    if (between.empty()) {
      splice(t, i, 2, reduce_square(WordTerm{free, {level, level}}, 0), 1, step);
    } else {
      const Permutation through = Permutation(n).times_generator(level);
      const AlgebraElement inner = reduce_level(WordTerm{free, between}, level - 1);
      for (const auto& [bt, bc] : inner.terms()) {
        AlgebraElement local(n);
        const TiePartition moved = bt.ties.image(through);
        const auto mid = positions_of(bt.word, level - 1);
        if (mid.empty()) {
          // g B g = B g^2 = B + delta e B g when B commutes with g.
          local.add(WordTerm{moved, bt.word}, 1);
          WordTerm tied{moved.join(level - 1, level), bt.word};
          tied.word.push_back(level);
          local.add(tied, delta);
        } else {
          // g B1 h B2 g = B1 h g h B2.
          WordTerm braided{moved, {}};
          braided.word.assign(bt.word.begin(), bt.word.begin() + static_cast<std::ptrdiff_t>(mid[0]));
          braided.word.insert(braided.word.end(), {level - 1, level, level - 1});
          braided.word.insert(braided.word.end(),
                              bt.word.begin() + static_cast<std::ptrdiff_t>(mid[0]) + 1,
                              bt.word.end());
          local.add(braided, 1);
        }
        splice(t, i, k - i + 1, local, bc, step);
      }
    }
    for (const auto& [st, sc] : step.terms()) out += reduce_level(st, level).scaled(sc);
    return out;
  }

  std::optional<std::mt19937_64> rng_;
  std::map<WordTerm, TracePolynomial> memo_;
};

}  // namespace

TracePolynomial trace_rewrite(const AlgebraElement& a, std::optional<std::uint64_t> seed) {
  RewriteEngine engine(seed);
  TracePolynomial sum;
  for (const auto& [t, c] : a.terms()) sum += c * engine.trace_term(t);
  return sum;
}

TracePolynomial trace_rewrite(const BraidWord& w, std::optional<std::uint64_t> seed) {
  return trace_rewrite(inject(w), seed);
}

}  // namespace theta
