#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "theta/algebra.hpp"
#include "theta/catalog.hpp"
#include "theta/invariants.hpp"

namespace {

const theta::BraidWord& word(const char* name) {
  static const theta::Catalog cat = theta::Catalog::builtin();
  static std::map<std::string, theta::BraidWord> words;
  auto it = words.find(name);
  if (it == words.end()) it = words.emplace(name, cat.at(name).word()).first;
  return it->second;
}

void BM_TraceParallel(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(theta::trace(word(name), theta::ExecutionPolicy::Parallel));
}

void BM_TraceSerial(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(theta::trace(word(name), theta::ExecutionPolicy::Serial));
}

void BM_TraceRewrite(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(theta::trace_rewrite(word(name)));
}

void BM_ThetaClosed(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(theta::theta_closed(word(name)));
}

void BM_ThetaSkein(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(theta::theta_skein(word(name)));
}

}  // namespace

BENCHMARK_CAPTURE(BM_TraceParallel, L11a467, "L11a467{0,1}")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TraceSerial, L11a467, "L11a467{0,1}")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TraceParallel, L10n79, "L10n79{1,1}")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TraceSerial, L10n79, "L10n79{1,1}")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TraceRewrite, 8_20, "8_20")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TraceParallel, 8_20, "8_20")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ThetaClosed, L11n358, "L11n358{0,1}")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ThetaSkein, L10n76, "L10n76{1,1}")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
