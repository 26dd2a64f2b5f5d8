#include "theta/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace theta {

void validate(const BraidWord& w) {
  if (w.strands < 1 || w.strands > kMaxStrands)
    throw std::invalid_argument("strand count must lie in [1, 16]");
  for (int a : w.letters) {
    if (a == 0) throw std::invalid_argument("braid letter 0");
    if (std::abs(a) >= w.strands)
      throw std::invalid_argument("braid letter " + std::to_string(a) + " needs more than " +
                                  std::to_string(w.strands) + " strands");
  }
}

BraidWord parse_braid(std::string_view text, std::optional<int> strands) {
  std::string_view body = text;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  body = trim(body);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw std::invalid_argument("unbalanced braces in braid text");
    body = body.substr(1, body.size() - 2);
  } else if (body.find_first_of("{}") != std::string_view::npos) {
    throw std::invalid_argument("unbalanced braces in braid text");
  }

  BraidWord w;
  std::size_t i = 0;
  bool expect_value = true;
  while (i < body.size()) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == ',') {
      if (expect_value) throw std::invalid_argument("empty entry in braid text");
      expect_value = true;
      ++i;
      continue;
    }
    std::size_t start = i;
    if (c == '-' || c == '+') ++i;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
    int value = 0;
    const char* first = body.data() + start + (body[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, body.data() + i, value);
    if (ec != std::errc() || ptr != body.data() + i)
      throw std::invalid_argument("malformed braid letter near '" +
                                  std::string(body.substr(start, i - start + 1)) + "'");
    w.letters.push_back(value);
    expect_value = false;
  }
  if (expect_value && !w.letters.empty()) throw std::invalid_argument("trailing comma in braid text");

  int needed = 1;
  for (int a : w.letters) {
    if (a == 0) throw std::invalid_argument("braid letter 0");
    needed = std::max(needed, std::abs(a) + 1);
  }
  if (strands) {
    if (*strands < needed)
      throw std::invalid_argument("strand count " + std::to_string(*strands) +
                                  " too small for the letters (need " + std::to_string(needed) +
                                  ")");
    w.strands = *strands;
  } else {
    w.strands = needed;
  }
  validate(w);
  return w;
}

std::string to_string(const BraidWord& w) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(w.letters[i]);
  }
  return out + "}";
}

Permutation braid_permutation(const BraidWord& w) {
  // at[pos] = starting position of the strand currently at pos. This is the
  // inverse of s_{j1} o ... o s_{jm}.
  Permutation at(w.strands);
  for (int a : w.letters) at = at.times_generator(std::abs(a));
  return at.inverse();
}

int ComponentStructure::lk(int i, int j) const { return static_cast<int>(linking[i][j].get_num().get_si()); }

std::vector<int> ComponentStructure::strands_of(int c) const {
  std::vector<int> out;
  for (std::size_t p = 0; p < component_of.size(); ++p)
    if (component_of[p] == c) out.push_back(static_cast<int>(p));
  return out;
}

int ComponentStructure::total_linking() const {
  int sum = 0;
  for (int i = 1; i <= count; ++i)
    for (int j = i + 1; j <= count; ++j) sum += lk(i, j);
  return sum;
}

ComponentStructure components(const BraidWord& w) {
  validate(w);
  const Permutation perm = braid_permutation(w);
  ComponentStructure cs;
  cs.component_of.assign(static_cast<std::size_t>(w.strands), 0);
  for (int p = 0; p < w.strands; ++p) {
    if (cs.component_of[p] != 0) continue;
    ++cs.count;
    for (int x = p; cs.component_of[x] == 0; x = perm(x)) cs.component_of[x] = cs.count;
  }
  cs.linking.assign(static_cast<std::size_t>(cs.count + 1),
                    std::vector<Rational>(static_cast<std::size_t>(cs.count + 1), 0));
  std::vector<int> at(static_cast<std::size_t>(w.strands));
  for (int p = 0; p < w.strands; ++p) at[p] = p;
  for (int a : w.letters) {
    int i = std::abs(a);
    int c1 = cs.component_of[at[i - 1]];
    int c2 = cs.component_of[at[i]];
    if (c1 != c2) {
      Rational half(a > 0 ? 1 : -1, 2);
      cs.linking[c1][c2] += half;
      cs.linking[c2][c1] += half;
    }
    std::swap(at[i - 1], at[i]);
  }
  for (int i = 1; i <= cs.count; ++i)
    for (int j = 1; j <= cs.count; ++j)
      if (!is_integer(cs.linking[i][j]))
        throw std::logic_error("non-integral linking number in " + to_string(w));
  return cs;
}

int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int a : w.letters) sum += a > 0 ? 1 : -1;
  return sum;
}

std::vector<CrossingInfo> all_crossings(const BraidWord& w) {
  const ComponentStructure cs = components(w);
  std::vector<CrossingInfo> out;
  out.reserve(w.letters.size());
  std::vector<int> at(static_cast<std::size_t>(w.strands));
  for (int p = 0; p < w.strands; ++p) at[p] = p;
  for (int a : w.letters) {
    int i = std::abs(a);
    int left = cs.component_of[at[i - 1]];
    int right = cs.component_of[at[i]];
    CrossingInfo info;
    info.first = std::min(left, right);
    info.second = std::max(left, right);
    info.sign = a > 0 ? 1 : -1;
    info.over = a > 0 ? left : right;
    out.push_back(info);
    std::swap(at[i - 1], at[i]);
  }
  return out;
}

CrossingInfo crossing_components(const BraidWord& w, std::size_t position) {
  if (position >= w.letters.size()) throw std::out_of_range("crossing position out of range");
  return all_crossings(w)[position];
}

BraidWord extract_sublink(const BraidWord& w, const std::set<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("extract_sublink needs at least one component");
  const ComponentStructure cs = components(w);
  for (int c : keep)
    if (c < 1 || c > cs.count) throw std::invalid_argument("unknown component id " + std::to_string(c));
  std::vector<char> kept(static_cast<std::size_t>(w.strands));
  int survivors = 0;
  for (int p = 0; p < w.strands; ++p) {
    kept[p] = keep.count(cs.component_of[p]) ? 1 : 0;
    survivors += kept[p];
  }
  BraidWord out;
  out.strands = survivors;
  std::vector<int> at(static_cast<std::size_t>(w.strands));
  for (int p = 0; p < w.strands; ++p) at[p] = p;
  for (int a : w.letters) {
    int i = std::abs(a);
    if (kept[at[i - 1]] && kept[at[i]]) {
      // Kept strands never cross deleted ones in the output, so only the
      // rank among kept strands matters.
      int rank = 0;
      for (int p = 0; p < i - 1; ++p) rank += kept[at[p]];
      out.letters.push_back(a > 0 ? rank + 1 : -(rank + 1));
    }
    std::swap(at[i - 1], at[i]);
  }
  return out;
}

BraidWord switch_crossing(const BraidWord& w, std::size_t position) {
  if (position >= w.letters.size()) throw std::out_of_range("crossing position out of range");
  BraidWord r = w;
  r.letters[position] = -r.letters[position];
  return r;
}

BraidWord smooth_crossing(const BraidWord& w, std::size_t position) {
  if (position >= w.letters.size()) throw std::out_of_range("crossing position out of range");
  BraidWord r = w;
  r.letters.erase(r.letters.begin() + static_cast<std::ptrdiff_t>(position));
  return r;
}

BraidWord mirror(const BraidWord& w) {
  BraidWord r = w;
  for (int& a : r.letters) a = -a;
  return r;
}

BraidWord cycle(const BraidWord& w) {
  BraidWord r = w;
  if (!r.letters.empty()) std::rotate(r.letters.begin(), r.letters.begin() + 1, r.letters.end());
  return r;
}

BraidWord conjugate(const BraidWord& w, int letter) {
  if (letter == 0 || std::abs(letter) >= w.strands)
    throw std::invalid_argument("conjugating letter out of range");
  BraidWord r;
  r.strands = w.strands;
  r.letters.reserve(w.letters.size() + 2);
  r.letters.push_back(letter);
  r.letters.insert(r.letters.end(), w.letters.begin(), w.letters.end());
  r.letters.push_back(-letter);
  return r;
}

BraidWord stabilize(const BraidWord& w, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilization sign must be +1 or -1");
  if (w.strands + 1 > kMaxStrands) throw std::invalid_argument("too many strands to stabilize");
  BraidWord r = w;
  r.letters.push_back(sign * w.strands);
  ++r.strands;
  return r;
}

BraidWord disjoint_union(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.strands = a.strands + b.strands;
  if (r.strands > kMaxStrands) throw std::invalid_argument("too many strands");
  for (int x : b.letters) r.letters.push_back(x > 0 ? x + a.strands : x - a.strands);
  return r;
}

BraidWord connected_sum(const BraidWord& a, const BraidWord& b) {
  if (components(a).count != 1 || components(b).count != 1)
    throw std::invalid_argument("connected_sum needs two knot closures");
  BraidWord r = a;
  const int shift = a.strands - 1;
  r.strands = a.strands + b.strands - 1;
  if (r.strands > kMaxStrands) throw std::invalid_argument("too many strands");
  for (int x : b.letters) r.letters.push_back(x > 0 ? x + shift : x - shift);
  return r;
}

}  // namespace theta
