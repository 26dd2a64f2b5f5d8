#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "theta/algebra.hpp"
#include "theta/braid.hpp"
#include "theta/scalar.hpp"

namespace theta {

enum class Engine { Default, Trace, Skein, Closed, All };
enum class InvariantKind { Theta, ThetaD, Homflypt };

struct InvariantRequest {
  BraidWord word;
  InvariantKind kind = InvariantKind::Theta;
  int d = 1;  // only for ThetaD
  Engine engine = Engine::Default;
};

/// Raised by Engine::All when two engines return different values.
class EngineDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lambda^(n-1) * s^e(w) * tr(w) with z = delta E / omega.
ScalarValue theta_trace(const BraidWord& w, ExecutionPolicy policy = ExecutionPolicy::Parallel);
/// Theta at E = 1.
ScalarValue homflypt(const BraidWord& w, ExecutionPolicy policy = ExecutionPolicy::Parallel);
/// Recursion on mixed crossings down to split unions of knots.
ScalarValue theta_skein(const BraidWord& w);
/// Sum over partitions of the components of products of sublink P values.
ScalarValue theta_closed(const BraidWord& w);

/// Dispatches on the engine. Default picks the trace engine for knots and
/// the closed formula otherwise; All runs the three engines and throws
/// EngineDisagreement unless they agree.
ScalarValue theta(const BraidWord& w, Engine engine = Engine::Default);
ScalarValue theta_d(const BraidWord& w, int d, Engine engine = Engine::Default);
ScalarValue evaluate(const InvariantRequest& request);

/// Theta - P - lambda^lk (1/E - 1) mu P(K1) P(K2) == 0 for a two-component
/// closure. Throws std::invalid_argument for other component counts.
bool two_component_decomposition_check(const BraidWord& w);

struct ComparisonReport {
  std::string link1;
  std::string link2;
  ScalarValue p_difference;
  ScalarValue theta_difference;
  /// theta_difference at E = 1/2 and E = 1/3, keyed "1/2", "1/3".
  std::map<std::string, ScalarValue> specializations;
  bool p_equal = false;
  bool theta_distinguished = false;

  nlohmann::json to_json() const;
};

/// Builds the report from two already computed Theta values.
ComparisonReport compare_values(const ScalarValue& theta1, const ScalarValue& theta2, const std::string& name1,
                                const std::string& name2);
ComparisonReport compare(const BraidWord& w1, const BraidWord& w2, const std::string& name1 = "",
                         const std::string& name2 = "", Engine engine = Engine::Default);

// Combinatorial quantities of the closed formula.
inline constexpr int kDefaultCombinatoricsBound = 10;
std::vector<std::vector<int>> partitions_of(int n, int bound = kDefaultCombinatoricsBound);
Integer stirling(int n, int k, int bound = kDefaultCombinatoricsBound);
/// (1/E - 1)(1/E - 2)...(1/E - k + 1), with E_1 = 1.
ScalarValue e_k(int k);
ScalarValue mu();

std::string engine_name(Engine e);
Engine parse_engine(const std::string& s);

}  // namespace theta
