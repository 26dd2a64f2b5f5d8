#include "theta/invariants.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <utility>

namespace theta {

ScalarValue mu() { return ScalarValue::mu(); }

ScalarValue e_k(int k) {
  if (k < 1) throw std::invalid_argument("e_k needs k >= 1");
  ScalarValue result(1);
  const ScalarValue inv_e = ScalarValue::E(-1);
  for (int j = 1; j < k; ++j) result *= inv_e - ScalarValue(j);
  return result;
}

std::vector<std::vector<int>> partitions_of(int n, int bound) {
  if (n > bound) throw std::invalid_argument("set size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  return set_partitions(n);
}

Integer stirling(int n, int k, int bound) {
  if (n > bound) throw std::invalid_argument("set size " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
  return stirling2(n, k);
}

ScalarValue theta_trace(const BraidWord& w, ExecutionPolicy policy) {
  const TracePolynomial t = trace(w, policy);
  const int n = w.strands;
  return ScalarValue::capital_lambda().pow(n - 1) * ScalarValue::s(exponent_sum(w)) * substitute_z(t);
}

ScalarValue homflypt(const BraidWord& w, ExecutionPolicy policy) {
  return theta_trace(w, policy).specialize_E(1);
}

// ---------------------------------------------------------------------------
// Skein engine.

namespace {

class SkeinEvaluator {
 public:
  ScalarValue operator()(const BraidWord& w) {
    auto key = std::make_pair(w.strands, w.letters);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ScalarValue v = evaluate(w);
    memo_.emplace(std::move(key), v);
    return v;
  }

 private:
  ScalarValue evaluate(const BraidWord& w) {
    const ComponentStructure cs = components(w);
    if (cs.count == 1) return homflypt(w);

    // Look for a crossing where component 1 passes under another component.
    const std::vector<CrossingInfo> crossings = all_crossings(w);
    for (std::size_t p = 0; p < crossings.size(); ++p) {
      const CrossingInfo& c = crossings[p];
      if (!c.mixed() || c.first != 1 || c.over == 1) continue;
      const int eps = c.sign;
      return ScalarValue::lambda(eps) * (*this)(switch_crossing(w, p)) +
             ScalarValue(eps) * ScalarValue::delta() * ScalarValue::s(eps) * (*this)(smooth_crossing(w, p));
    }

    // Component 1 lies above everything else: the closure is split.
    std::set<int> rest;
    for (int c = 2; c <= cs.count; ++c) rest.insert(c);
    return mu() * ScalarValue::E(-1) * (*this)(extract_sublink(w, {1})) * (*this)(extract_sublink(w, rest));
  }

  std::map<std::pair<int, std::vector<int>>, ScalarValue> memo_;
};

}  // namespace

ScalarValue theta_skein(const BraidWord& w) {
  validate(w);
  return SkeinEvaluator{}(w);
}

// ---------------------------------------------------------------------------
// Closed formula.

ScalarValue theta_closed(const BraidWord& w) {
  const ComponentStructure cs = components(w);
  const int c = cs.count;
  if (c > kDefaultCombinatoricsBound)
    throw std::invalid_argument("too many components for the closed formula");

  // P of every non-empty sublink, indexed by component bitmask.
  const auto subsets = static_cast<std::int64_t>(1) << c;
  std::vector<ScalarValue> p_of(static_cast<std::size_t>(subsets));
#pragma omp parallel for schedule(dynamic, 1) if (c > 2)
  for (std::int64_t mask = 1; mask < subsets; ++mask) {
    std::set<int> keep;
    for (int i = 0; i < c; ++i)
      if (mask & (static_cast<std::int64_t>(1) << i)) keep.insert(i + 1);
    p_of[static_cast<std::size_t>(mask)] = homflypt(extract_sublink(w, keep), ExecutionPolicy::Serial);
  }

  ScalarValue total;
  for (const auto& labels : partitions_of(c)) {
    int k = 0;
    for (int l : labels) k = std::max(k, l + 1);
    std::vector<std::int64_t> block_mask(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < c; ++i) block_mask[labels[i]] |= static_cast<std::int64_t>(1) << i;
    int nu = 0;
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j)
        if (labels[i] != labels[j]) nu += cs.lk(i + 1, j + 1);
    ScalarValue term = mu().pow(k - 1) * e_k(k) * ScalarValue::lambda(nu);
    for (std::int64_t m : block_mask) term *= p_of[static_cast<std::size_t>(m)];
    total += term;
  }
  return total;
}

// ---------------------------------------------------------------------------

ScalarValue theta(const BraidWord& w, Engine engine) {
  switch (engine) {
    case Engine::Trace:
      return theta_trace(w);
    case Engine::Skein:
      return theta_skein(w);
    case Engine::Closed:
      return theta_closed(w);
    case Engine::All: {
      const ScalarValue a = theta_trace(w);
      const ScalarValue b = theta_skein(w);
      const ScalarValue c = theta_closed(w);
      if (!(a == b) || !(a == c))
        throw EngineDisagreement("engines disagree on " + to_string(w) + ": trace=" + to_text(a) +
                                 " skein=" + to_text(b) + " closed=" + to_text(c));
      return a;
    }
    case Engine::Default:
      break;
  }
  return components(w).count == 1 ? theta_trace(w) : theta_closed(w);
}

ScalarValue theta_d(const BraidWord& w, int d, Engine engine) {
  if (d < 1) throw std::invalid_argument("theta_d needs d >= 1");
  return theta(w, engine).specialize_E(Rational(1, d));
}

ScalarValue evaluate(const InvariantRequest& request) {
  switch (request.kind) {
    case InvariantKind::Theta:
      return theta(request.word, request.engine);
    case InvariantKind::ThetaD:
      return theta_d(request.word, request.d, request.engine);
    case InvariantKind::Homflypt:
      break;
  }
  return theta(request.word, request.engine).specialize_E(1);
}

bool two_component_decomposition_check(const BraidWord& w) {
  const ComponentStructure cs = components(w);
  if (cs.count != 2) throw std::invalid_argument("two_component_decomposition_check needs 2 components");
  const ScalarValue th = theta_trace(w);
  const ScalarValue p = th.specialize_E(1);
  const ScalarValue split = mu() * homflypt(extract_sublink(w, {1})) * homflypt(extract_sublink(w, {2}));
  const ScalarValue rest = th - p - ScalarValue::lambda(cs.lk(1, 2)) * (ScalarValue::E(-1) - 1) * split;
  return rest.is_zero();
}

nlohmann::json ComparisonReport::to_json() const {
  nlohmann::json spec = nlohmann::json::object();
  for (const auto& [k, v] : specializations) spec[k] = theta::to_json(v);
  return {{"link1", link1},
          {"link2", link2},
          {"p_equal", p_equal},
          {"theta_distinguished", theta_distinguished},
          {"p_difference", theta::to_json(p_difference)},
          {"theta_difference", theta::to_json(theta_difference)},
          {"specializations", spec}};
}

ComparisonReport compare_values(const ScalarValue& theta1, const ScalarValue& theta2, const std::string& name1,
                                const std::string& name2) {
  ComparisonReport r;
  r.link1 = name1;
  r.link2 = name2;
  r.theta_difference = theta1 - theta2;
  r.p_difference = r.theta_difference.specialize_E(1);
  r.specializations["1/2"] = r.theta_difference.specialize_E(Rational(1, 2));
  r.specializations["1/3"] = r.theta_difference.specialize_E(Rational(1, 3));
  r.p_equal = r.p_difference.is_zero();
  r.theta_distinguished = r.p_equal && !r.theta_difference.is_zero();
  return r;
}

ComparisonReport compare(const BraidWord& w1, const BraidWord& w2, const std::string& name1,
                         const std::string& name2, Engine engine) {
  return compare_values(theta(w1, engine), theta(w2, engine), name1.empty() ? to_string(w1) : name1,
                        name2.empty() ? to_string(w2) : name2);
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::Trace: return "trace";
    case Engine::Skein: return "skein";
    case Engine::Closed: return "closed";
    case Engine::All: return "all";
    case Engine::Default: break;
  }
  return "default";
}

Engine parse_engine(const std::string& s) {
  if (s == "trace") return Engine::Trace;
  if (s == "skein") return Engine::Skein;
  if (s == "closed") return Engine::Closed;
  if (s == "all") return Engine::All;
  if (s == "default" || s.empty()) return Engine::Default;
  throw std::invalid_argument("unknown engine '" + s + "'");
}

}  // namespace theta
