#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "theta/braid.hpp"
#include "theta/partition.hpp"
#include "theta/poly.hpp"

namespace theta {

// ---------------------------------------------------------------------------
// Word-level elements: ties on the left, a positive word on the right.

struct WordTerm {
  TiePartition ties;
  std::vector<int> word;  // positive generator indices

  auto operator<=>(const WordTerm&) const = default;
  bool operator==(const WordTerm&) const = default;
};

class AlgebraElement {
 public:
  explicit AlgebraElement(int strands = 1) : strands_(strands) {}

  static AlgebraElement one(int strands);
  static AlgebraElement from_term(WordTerm t, const TracePolynomial& c = TracePolynomial(1));

  int strands() const { return strands_; }
  const std::map<WordTerm, TracePolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const WordTerm& t, const TracePolynomial& c);
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement scaled(const TracePolynomial& c) const;

  bool operator==(const AlgebraElement&) const = default;

 private:
  int strands_;
  std::map<WordTerm, TracePolynomial> terms_;
};

/// delta = q - q^-1 as a trace coefficient.
TracePolynomial trace_delta();

/// g_i^-1 = g_i - delta e_i applied to every negative letter.
AlgebraElement inject(const BraidWord& w);

/// Moving a tie partition to the right of g_i: strands i-1 and i (0-based)
/// swap places.
TiePartition tie_commute(const TiePartition& p, int i);

/// Replaces the adjacent pair g_i g_i at `position` using
/// g_i^2 = 1 + delta e_i g_i, pushing the new tie to the left end.
AlgebraElement reduce_square(const WordTerm& t, std::size_t position);

/// Closed form of g_i^r on `strands` strands for any integer r.
AlgebraElement power_closed_form(int strands, int i, int r);

/// Product in the algebra (ties of the right factor are moved left).
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// ---------------------------------------------------------------------------
// Basis normal form: combinations of P * T_w with T_w the positive lift of
// a permutation w. Every element of the algebra has a unique such form.

struct BasisKey {
  TiePartition ties;
  Permutation perm;

  bool operator==(const BasisKey&) const = default;
};

struct BasisKeyHash {
  std::size_t operator()(const BasisKey& k) const noexcept {
    std::uint64_t h = k.ties.key() * 0x9E3779B97F4A7C15ULL;
    h ^= k.perm.key() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using NormalForm = std::unordered_map<BasisKey, TracePolynomial, BasisKeyHash>;

enum class ExecutionPolicy { Serial, Parallel };

NormalForm normal_form(const BraidWord& w, ExecutionPolicy policy = ExecutionPolicy::Parallel);
NormalForm normal_form(const AlgebraElement& a, ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Markov trace with symbolic E, computed on the basis normal form one
/// strand at a time.
TracePolynomial trace(const BraidWord& w, ExecutionPolicy policy = ExecutionPolicy::Parallel);
TracePolynomial trace(const AlgebraElement& a, ExecutionPolicy policy = ExecutionPolicy::Parallel);
TracePolynomial trace(const NormalForm& nf, int strands,
                      ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// Reference engine: rewrites words directly with the quadratic and braid
/// relations and cyclic rotation. With a seed, every choice of where to
/// rewrite next is randomized; the result must not depend on it.
TracePolynomial trace_rewrite(const BraidWord& w, std::optional<std::uint64_t> seed = std::nullopt);
TracePolynomial trace_rewrite(const AlgebraElement& a,
                              std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace theta
