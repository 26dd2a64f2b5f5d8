#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "theta/braid.hpp"
#include "theta/invariants.hpp"

namespace theta {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  int max_strands = 4;
  int max_length = 10;
  int samples = 200;
  double tolerance = 1e-9;
};

/// Strand count uniform in [2, max_strands], length uniform in [0, max_length].
BraidWord random_braid(std::mt19937_64& rng, int max_strands, int max_length);
/// Rejection-samples random_braid until the closure has `count` components.
BraidWord random_braid_with_components(std::mt19937_64& rng, int max_strands, int max_length,
                                       int count);

// Groups of checks. Randomized groups draw from SuiteOptions::seed only, so
// a run is reproducible.
std::vector<CheckResult> check_trace_values();
std::vector<CheckResult> check_knot_values();
std::vector<CheckResult> check_appendix_values();
std::vector<CheckResult> check_pair_differences();
std::vector<CheckResult> check_engine_agreement(const SuiteOptions& o);
std::vector<CheckResult> check_markov_invariance(const SuiteOptions& o);
std::vector<CheckResult> check_structure(const SuiteOptions& o);
std::vector<CheckResult> check_stirling();
std::vector<CheckResult> check_esystem(const SuiteOptions& o);
/// Reference P values for the extra catalog entries (hand-derived, see
/// external_homflypt).
std::vector<CheckResult> check_external_values();
/// Homflypt skein at every crossing and the Theta_d behaviour of the pairs.
std::vector<CheckResult> check_specializations(const SuiteOptions& o);

/// Which catalog links have a Theta value without denominator and with
/// integral lambda powers. Reported, not asserted.
std::vector<std::string> laurent_form_notes();

/// "paper", "properties" or "esystem"; throws std::invalid_argument otherwise.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& o);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace theta
