#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

// Hard limit on strands for partitions and permutations; both pack into a
// 64-bit key with four bits per strand.
inline constexpr int kMaxStrands = 16;

// Permutation of {0..n-1}. A positive braid word g_{j1}...g_{jm} maps to
// s_{j1} o ... o s_{jm}, where generator j swaps positions j-1 and j.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);

  int size() const { return n_; }
  int operator()(int x) const { return img_[x]; }

  Permutation inverse() const;
  // (*this o inner)(x) == (*this)(inner(x))
  Permutation compose(const Permutation& inner) const;
  // *this o s_i, i.e. swap the images of i-1 and i.
  Permutation times_generator(int i) const;
  bool has_descent(int i) const { return img_[i - 1] > img_[i]; }
  bool fixes_top() const { return img_[n_ - 1] == n_ - 1; }
  Permutation drop_top() const;
  Permutation with_extra_strand() const;
  bool is_identity() const;
  int length() const;
  // A reduced word of positive generator indices whose product is *this.
  std::vector<int> reduced_word() const;

  std::uint64_t key() const;
  auto operator<=>(const Permutation& o) const = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> img_{};
};

// Set partition of {0..n-1}, stored as a restricted growth string (labels
// numbered by first appearance), so equal partitions compare equal.
class TiePartition {
 public:
  TiePartition() = default;
  explicit TiePartition(int n);
  static TiePartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static TiePartition from_labels(const std::vector<int>& labels);

  int size() const { return n_; }
  int label(int x) const { return label_[x]; }
  int num_blocks() const;
  bool tied(int a, int b) const { return label_[a] == label_[b]; }
  bool is_singleton(int x) const;
  bool is_discrete() const { return num_blocks() == n_; }

  TiePartition join(int a, int b) const;
  TiePartition join(const TiePartition& o) const;
  // Exchanges strands a and b (moving a tie across g_i uses a=i-1, b=i).
  TiePartition swapped(int a, int b) const;
  // The partition {p(B) : B a block}.
  TiePartition image(const Permutation& p) const;
  TiePartition isolate(int x) const;
  TiePartition drop_top() const;
  TiePartition with_extra_strand() const;

  std::vector<std::vector<int>> blocks() const;
  std::uint64_t key() const;
  // 1-based text, e.g. "{{1,2},{3}}".
  std::string to_string() const;
  auto operator<=>(const TiePartition& o) const = default;

 private:
  void canonicalize();

  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxStrands> label_{};
};

// Calls f(labels) for every set partition of {0..n-1} in lexicographic order
// of restricted growth strings. There are Bell(n) of them.
void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& f);
std::vector<std::vector<int>> set_partitions(int n);

Integer stirling2(int n, int k);
Integer bell(int n);

}  // namespace theta

template <>
struct std::hash<theta::TiePartition> {
  std::size_t operator()(const theta::TiePartition& p) const noexcept { return p.key(); }
};
template <>
struct std::hash<theta::Permutation> {
  std::size_t operator()(const theta::Permutation& p) const noexcept { return p.key(); }
};
