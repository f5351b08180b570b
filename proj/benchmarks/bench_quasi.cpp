#include <benchmark/benchmark.h>

#include "symm/nuij.hpp"
#include "symm/quasi.hpp"

namespace {

// ζ^m: a single root of multiplicity m.
symm::RationalPolynomial power_of_zeta(int m) {
  std::vector<symm::Rational> c(static_cast<std::size_t>(m) + 1, symm::Rational(0));
  c.front() = 1;
  return symm::RationalPolynomial(c);
}

void BM_NuijFamilyPoint(benchmark::State& state) {
  const auto p = power_of_zeta(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symm::nuij_family_point(p, 1e-3));
}
BENCHMARK(BM_NuijFamilyPoint)->DenseRange(2, 6);

void BM_VerifyQuasi(benchmark::State& state) {
  const auto p = power_of_zeta(static_cast<int>(state.range(0)));
  const auto grid = symm::default_epsilon_grid();
  for (auto _ : state) benchmark::DoNotOptimize(symm::quasi_for_multiplicity(p, grid, 16));
}
BENCHMARK(BM_VerifyQuasi)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
