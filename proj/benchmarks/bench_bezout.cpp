#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "symm/bezout.hpp"

namespace {

symm::RationalPolynomial random_monic(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::vector<symm::Rational> c{symm::Rational(1)};
  for (int k = 0; k < m; ++k) {
    symm::Rational x(num(rng), den(rng));
    x.canonicalize();
    c.push_back(x);
  }
  return symm::RationalPolynomial(c);
}

void BM_BezoutRational(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto p = random_monic(rng, static_cast<int>(state.range(0)));
  const auto q = p.derivative();
  for (auto _ : state) benchmark::DoNotOptimize(symm::bezout_matrix(p, q));
}
BENCHMARK(BM_BezoutRational)->DenseRange(2, 12, 2);

void BM_BezoutFloat(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto p = random_monic(rng, static_cast<int>(state.range(0))).cast<double>();
  const auto q = p.derivative();
  for (auto _ : state) benchmark::DoNotOptimize(symm::bezout_matrix(p, q));
}
BENCHMARK(BM_BezoutFloat)->DenseRange(2, 12, 2);

void BM_SymmetrizationDefect(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto p = random_monic(rng, static_cast<int>(state.range(0)));
  const auto h = symm::bezout_matrix(p, p.derivative());
  const auto a = symm::sylvester_matrix(p);
  for (auto _ : state) benchmark::DoNotOptimize(symm::symmetrization_defect(h, a));
}
BENCHMARK(BM_SymmetrizationDefect)->DenseRange(2, 8, 2);

void BM_HermitePsd(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const auto p = random_monic(rng, static_cast<int>(state.range(0)));
  const auto h = symm::bezout_matrix(p, p.derivative());
  for (auto _ : state) benchmark::DoNotOptimize(symm::psd_check(h));
}
BENCHMARK(BM_HermitePsd)->DenseRange(2, 8, 2);

}  // namespace

BENCHMARK_MAIN();
