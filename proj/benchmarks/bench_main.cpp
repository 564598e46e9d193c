#include <benchmark/benchmark.h>

#include "shilovkit/graded.hpp"
#include "shilovkit/invariants.hpp"
#include "shilovkit/verify.hpp"

using namespace shilovkit;

namespace {

DegreeMultiset odd_degrees(std::int64_t n) {
  std::vector<std::int64_t> d;
  for (std::int64_t k = 0; k < n; ++k) d.push_back(2 * k + 1);
  return DegreeMultiset(d);
}

void BM_ExteriorPoincare(benchmark::State& state) {
  const auto s = odd_degrees(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exterior_poincare(s));
}
BENCHMARK(BM_ExteriorPoincare)->Arg(4)->Arg(8)->Arg(16);

void BM_RecoverGenerators(benchmark::State& state) {
  const auto p = exterior_poincare(odd_degrees(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(recover_generators(p));
}
BENCHMARK(BM_RecoverGenerators)->Arg(4)->Arg(8)->Arg(16);

void BM_InvariantVector(benchmark::State& state) {
  const auto domains = enumerate_domains(200);
  for (auto _ : state)
    for (const auto& d : domains) benchmark::DoNotOptimize(invariant_vector(d));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(domains.size()));
}
BENCHMARK(BM_InvariantVector);

void BM_VerifyTheorem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(state.range(0)));
}
BENCHMARK(BM_VerifyTheorem)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
