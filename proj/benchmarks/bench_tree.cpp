#include <benchmark/benchmark.h>

#include "nsg/enumerate.hpp"

namespace {

void BM_Enumerate(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto summary = nsg::enumerate(genus);
    nodes += summary.total();
    benchmark::DoNotOptimize(summary);
  }
  state.counters["nodes/s"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Enumerate)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_CensusAlmostSymmetric(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto result = nsg::census(genus);
    nodes += result.visited;
    benchmark::DoNotOptimize(result);
  }
  state.counters["nodes/s"] =
      benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_CensusAlmostSymmetric)->Arg(14)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_Construct(benchmark::State& state) {
  for (auto _ : state) {
    nsg::NumericalSemigroup s({14, 15, 17, 19, 20});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Construct);

}  // namespace

BENCHMARK_MAIN();
