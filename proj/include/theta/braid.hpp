#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "theta/partition.hpp"
#include "theta/rational.hpp"

namespace theta {

/// A word in the Artin generators on `strands` strands. Letter a > 0 is
/// sigma_a, a < 0 is sigma_|a|^-1, with 1 <= |a| <= strands - 1.
///
/// Crossing picture: at sigma_i the strand coming from position i passes
/// over the strand coming from position i+1 (1-based); for sigma_i^-1 it
/// passes under. Only the skein engine depends on this.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

/// Throws std::invalid_argument on malformed input.
void validate(const BraidWord& w);

/// Accepts "{1,-2,1}" or "1 -2 1" / "1,-2,1". The strand count is
/// max|letter| + 1, or `strands` if given and at least that large.
BraidWord parse_braid(std::string_view text, std::optional<int> strands = std::nullopt);

/// "{1, -2, 1}"
std::string to_string(const BraidWord& w);

/// Underlying permutation: result(p) is the top position reached by the
/// strand starting at bottom position p.
Permutation braid_permutation(const BraidWord& w);

struct ComponentStructure {
  /// component_of[p] in 1..count for each bottom strand position p.
  std::vector<int> component_of;
  int count = 0;
  /// (count+1) x (count+1), indexed by component id; row/column 0 unused.
  std::vector<std::vector<Rational>> linking;

  int lk(int i, int j) const;
  /// Strand positions belonging to component id c.
  std::vector<int> strands_of(int c) const;
  /// Sum of all pairwise linking numbers.
  int total_linking() const;
};

ComponentStructure components(const BraidWord& w);

int exponent_sum(const BraidWord& w);

struct CrossingInfo {
  int first = 0;   ///< smaller component id
  int second = 0;  ///< larger component id
  int sign = 0;    ///< +1 or -1
  /// Component of the strand passing over at this crossing.
  int over = 0;
  bool mixed() const { return first != second; }
};

CrossingInfo crossing_components(const BraidWord& w, std::size_t position);
/// The same, for every letter at once (one pass).
std::vector<CrossingInfo> all_crossings(const BraidWord& w);

/// Sub-braid whose closure is the sublink formed by the listed component ids.
BraidWord extract_sublink(const BraidWord& w, const std::set<int>& keep);

BraidWord switch_crossing(const BraidWord& w, std::size_t position);
BraidWord smooth_crossing(const BraidWord& w, std::size_t position);
BraidWord mirror(const BraidWord& w);
/// Moves the first letter to the end (conjugation by its inverse).
BraidWord cycle(const BraidWord& w);
/// a w a^-1 for a single letter a.
BraidWord conjugate(const BraidWord& w, int letter);
/// w sigma_n^{+-1} on n+1 strands.
BraidWord stabilize(const BraidWord& w, int sign);

BraidWord disjoint_union(const BraidWord& a, const BraidWord& b);
/// Both closures must be knots.
BraidWord connected_sum(const BraidWord& a, const BraidWord& b);

}  // namespace theta
