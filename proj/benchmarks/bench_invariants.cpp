#include <benchmark/benchmark.h>

#include "numfactor/numfactor.hpp"

using namespace numfactor;

namespace {

const NumericalMonoid& mcnugget() {
  static const NumericalMonoid m({6, 9, 20});
  return m;
}

void BM_Factorizations(benchmark::State& state) {
  const NumericalMonoid m({6, 9, 20}, /*cache_capacity=*/0);
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    auto zset = factorizations(m, n);
    benchmark::DoNotOptimize(zset);
  }
}
BENCHMARK(BM_Factorizations)->Arg(126)->Arg(500)->Arg(2000);

void BM_CatenaryDegree(benchmark::State& state) {
  const NumericalMonoid m({6, 9, 20}, /*cache_capacity=*/0);
  const std::int64_t n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(catenary_degree(m, n));
}
BENCHMARK(BM_CatenaryDegree)->Arg(103)->Arg(500)->Arg(2000);

void BM_TameDegree(benchmark::State& state) {
  const NumericalMonoid m({6, 9, 20}, /*cache_capacity=*/0);
  const std::int64_t n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(tame_degree(m, n));
}
BENCHMARK(BM_TameDegree)->Arg(126)->Arg(500)->Arg(2000);

void BM_BettiElements(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(betti_elements(mcnugget()));
}
BENCHMARK(BM_BettiElements);

void BM_TameDegreeMonoid(benchmark::State& state) {
  for (auto _ : state) {
    const NumericalMonoid m({6, 9, 20}, /*cache_capacity=*/0);
    benchmark::DoNotOptimize(tame_degree_monoid(m));
  }
}
BENCHMARK(BM_TameDegreeMonoid);

void BM_ScanCatenary(benchmark::State& state) {
  const NumericalMonoid m({6, 9, 20}, 1024);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan(m, Invariant::Catenary, state.range(0), 1));
}
BENCHMARK(BM_ScanCatenary)->Arg(200)->Arg(464);

}  // namespace

BENCHMARK_MAIN();
