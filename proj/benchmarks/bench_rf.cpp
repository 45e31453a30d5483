#include <benchmark/benchmark.h>

#include "nsg/rf.hpp"

namespace {

void BM_RFEnumerate(benchmark::State& state) {
  nsg::NumericalSemigroup s({14, 15, 17, 19, 20});
  std::uint64_t matrices = 0;
  for (auto _ : state) {
    for (std::int64_t f : s.pseudo_frobenius()) {
      nsg::RFMatrixCursor cursor(s, f);
      nsg::RFMatrix m;
      while (cursor.next(m)) {
        ++matrices;
        benchmark::DoNotOptimize(m);
      }
    }
  }
  state.counters["matrices/s"] =
      benchmark::Counter(static_cast<double>(matrices), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_RFEnumerate);

void BM_LambdaTable(benchmark::State& state) {
  nsg::NumericalSemigroup s({14, 15, 17, 19, 20});
  for (auto _ : state) {
    auto table = nsg::lambda_table(s);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_LambdaTable);

void BM_Factorizations(benchmark::State& state) {
  nsg::NumericalSemigroup s({14, 15, 17, 19, 20});
  const std::int64_t value = 2 * s.frobenius();
  for (auto _ : state) {
    auto z = nsg::factorizations(s, value);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_Factorizations);

}  // namespace
