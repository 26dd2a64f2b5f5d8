#include "theta/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace theta {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxStrands)
    throw std::out_of_range("strand count " + std::to_string(n) + " outside [0, 16]");
}

}  // namespace

Permutation::Permutation(int n) {
  check_size(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (inner.n_ != n_) throw std::invalid_argument("permutation size mismatch");
  Permutation r(n_);
  for (int i = 0; i < n_; ++i) r.img_[i] = img_[inner.img_[i]];
  return r;
}

Permutation Permutation::times_generator(int i) const {
  Permutation r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

Permutation Permutation::drop_top() const {
  if (!fixes_top()) throw std::logic_error("drop_top on a permutation moving the top strand");
  Permutation r = *this;
  r.img_[n_ - 1] = 0;
  --r.n_;
  return r;
}

Permutation Permutation::with_extra_strand() const {
  check_size(n_ + 1);
  Permutation r = *this;
  r.img_[n_] = n_;
  ++r.n_;
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) inv += img_[i] > img_[j];
  return inv;
}

std::vector<int> Permutation::reduced_word() const {
  // Peel right descents: w = (w s_i) s_i with l(w s_i) = l(w) - 1.
  std::vector<int> rev;
  Permutation w = *this;
  for (;;) {
    int i = 1;
    while (i < w.n_ && !w.has_descent(i)) ++i;
    if (i >= w.n_) break;
    rev.push_back(i);
    w = w.times_generator(i);
  }
  return {rev.rbegin(), rev.rend()};
}

std::uint64_t Permutation::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
  return k;
}

// ---------------------------------------------------------------------------

TiePartition::TiePartition(int n) {
  check_size(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) label_[i] = static_cast<std::uint8_t>(i);
}

TiePartition TiePartition::from_labels(const std::vector<int>& labels) {
  check_size(static_cast<int>(labels.size()));
  TiePartition p;
  p.n_ = static_cast<std::uint8_t>(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= kMaxStrands) throw std::out_of_range("bad block label");
    p.label_[i] = static_cast<std::uint8_t>(labels[i]);
  }
  p.canonicalize();
  return p;
}

TiePartition TiePartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (const auto& b : blocks) {
    for (int x : b) {
      if (x < 0 || x >= n || labels[x] != -1)
        throw std::invalid_argument("blocks do not form a partition");
      labels[x] = next;
    }
    if (!b.empty()) ++next;
  }
  for (int& l : labels)
    if (l == -1) l = next++;
  return from_labels(labels);
}

void TiePartition::canonicalize() {
  std::array<int, kMaxStrands> relabel;
  relabel.fill(-1);
  int next = 0;
  for (int i = 0; i < n_; ++i) {
    int& r = relabel[label_[i]];
    if (r < 0) r = next++;
    label_[i] = static_cast<std::uint8_t>(r);
  }
  for (int i = n_; i < kMaxStrands; ++i) label_[i] = 0;
}

int TiePartition::num_blocks() const {
  int m = 0;
  for (int i = 0; i < n_; ++i) m = std::max(m, label_[i] + 1);
  return m;
}

bool TiePartition::is_singleton(int x) const {
  for (int i = 0; i < n_; ++i)
    if (i != x && label_[i] == label_[x]) return false;
  return true;
}

TiePartition TiePartition::join(int a, int b) const {
  if (label_[a] == label_[b]) return *this;
  TiePartition r = *this;
  const std::uint8_t from = std::max(label_[a], label_[b]);
  const std::uint8_t to = std::min(label_[a], label_[b]);
  for (int i = 0; i < n_; ++i)
    if (r.label_[i] == from) r.label_[i] = to;
  r.canonicalize();
  return r;
}

TiePartition TiePartition::join(const TiePartition& o) const {
  if (o.n_ != n_) throw std::invalid_argument("partition size mismatch");
  TiePartition r = *this;
  std::array<int, kMaxStrands> first;
  first.fill(-1);
  for (int i = 0; i < n_; ++i) {
    int& f = first[o.label_[i]];
    if (f < 0)
      f = i;
    else
      r = r.join(f, i);
  }
  return r;
}

TiePartition TiePartition::swapped(int a, int b) const {
  TiePartition r = *this;
  std::swap(r.label_[a], r.label_[b]);
  r.canonicalize();
  return r;
}

TiePartition TiePartition::image(const Permutation& p) const {
  TiePartition r = *this;
  for (int i = 0; i < n_; ++i) r.label_[p(i)] = label_[i];
  r.canonicalize();
  return r;
}

TiePartition TiePartition::isolate(int x) const {
  if (is_singleton(x)) return *this;
  TiePartition r = *this;
  r.label_[x] = static_cast<std::uint8_t>(num_blocks());
  r.canonicalize();
  return r;
}

TiePartition TiePartition::drop_top() const {
  TiePartition r = *this;
  r.label_[n_ - 1] = 0;
  --r.n_;
  r.canonicalize();
  return r;
}

TiePartition TiePartition::with_extra_strand() const {
  check_size(n_ + 1);
  TiePartition r = *this;
  r.label_[n_] = static_cast<std::uint8_t>(num_blocks());
  ++r.n_;
  return r;
}

std::vector<std::vector<int>> TiePartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks()));
  for (int i = 0; i < n_; ++i) out[label_[i]].push_back(i);
  return out;
}

std::uint64_t TiePartition::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k |= static_cast<std::uint64_t>(label_[i]) << (4 * i);
  return k;
}

std::string TiePartition::to_string() const {
  std::string out = "{";
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) out += ",";
    first_block = false;
    out += "{";
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(b[j] + 1);
    }
    out += "}";
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

void for_each_set_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  if (n < 0) throw std::invalid_argument("negative set size");
  if (n == 0) {
    f({});
    return;
  }
  // Restricted growth strings a[0]=0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  for (;;) {
    f(a);
    int i = n - 1;
    while (i > 0 && a[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  for_each_set_partition(n, [&](const std::vector<int>& a) { out.push_back(a); });
  return out;
}

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("negative argument to stirling2");
  // S(i, j) = j S(i-1, j) + S(i-1, j-1), one row at a time.
  std::vector<Integer> row(static_cast<std::size_t>(k + 1), 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = std::min(i, k); j >= 0; --j)
      row[j] = j == 0 ? Integer(0) : Integer(j * row[j] + row[j - 1]);
  return row[k];
}

Integer bell(int n) {
  Integer sum = 0;
  for (int k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

}  // namespace theta
