#include <benchmark/benchmark.h>

#include "hsearch/harmonic.hpp"
#include "hsearch/kernels.hpp"

using namespace hsearch;

namespace {

constexpr u64 kPrime = 1'000'000'007;

void BM_ReferenceBatchInv(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::reciprocal_sum(kPrime, 1, n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_SerialKernel(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reciprocal_sum(kPrime, 1, n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_ParallelKernel(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::reciprocal_sum_parallel(kPrime, 1, n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_HAll(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(h_all(p).at(24).residue);
}

}  // namespace

BENCHMARK(BM_ReferenceBatchInv)->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(BM_SerialKernel)->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(BM_ParallelKernel)->Arg(1 << 12)->Arg(1 << 20)->UseRealTime();
BENCHMARK(BM_HAll)->Arg(1'000'003)->Arg(100'000'007);

BENCHMARK_MAIN();
