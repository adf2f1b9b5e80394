// Serial reference census against the OpenMP kernel over the same genus
// range. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "nsg/enumeration.hpp"

namespace {

void BM_CensusSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsg::census_serial(state.range(0)));
  }
}

void BM_CensusParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsg::census_parallel(state.range(0)));
  }
}

void BM_UlrichScan(benchmark::State& state) {
  const auto h = nsg::share(nsg::NumericalSemigroup::from_generators({5, 7, 9, 11, 13}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nsg::verify_ulrich_classification(h));
  }
}

}  // namespace

BENCHMARK(BM_CensusSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UlrichScan)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
