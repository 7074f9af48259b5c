#include <benchmark/benchmark.h>

#include "qgs/direct_sum.hpp"
#include "qgs/gauss.hpp"

using namespace qgs;

namespace {

SumSpec spec_for(std::int64_t k) { return quad_exp_spec({3, k, k % 2}); }

void BM_DirectSumSerial(benchmark::State& state) {
  const SumSpec s = spec_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(direct_sum_serial(s, 128));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DirectSumParallel(benchmark::State& state) {
  const SumSpec s = spec_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(direct_sum(s, 128));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GaussFast(benchmark::State& state) {
  const QuadExpSum q{3, state.range(0), state.range(0) % 2};
  for (auto _ : state) benchmark::DoNotOptimize(gauss_fast(q, 128));
}

}  // namespace

BENCHMARK(BM_DirectSumSerial)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectSumParallel)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaussFast)->RangeMultiplier(1000)->Range(1000, 1000000000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
