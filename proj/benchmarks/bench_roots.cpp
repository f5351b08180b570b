#include <vector>

#include <benchmark/benchmark.h>

#include "symm/real_roots.hpp"

namespace {

// Roots 1, 2, …, m, each repeated `mult` times.
symm::RationalPolynomial ladder(int m, int mult) {
  symm::RationalPolynomial p{symm::Rational(1)};
  for (int k = 1; k <= m; ++k)
    for (int r = 0; r < mult; ++r) p = p * symm::RationalPolynomial{symm::Rational(1), symm::Rational(-k)};
  return p;
}

void BM_RealRootsSimple(benchmark::State& state) {
  const auto p = ladder(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(symm::real_roots(p));
}
BENCHMARK(BM_RealRootsSimple)->DenseRange(2, 10, 2);

void BM_RealRootsDouble(benchmark::State& state) {
  const auto p = ladder(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(symm::real_roots(p));
}
BENCHMARK(BM_RealRootsDouble)->DenseRange(1, 5);

void BM_SturmCount(benchmark::State& state) {
  const auto p = ladder(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(symm::count_distinct_real_roots(p));
}
BENCHMARK(BM_SturmCount)->DenseRange(2, 10, 2);

void BM_IsHyperbolic(benchmark::State& state) {
  const auto p = ladder(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(symm::is_hyperbolic(p));
}
BENCHMARK(BM_IsHyperbolic)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
