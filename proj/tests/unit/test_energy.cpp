#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "common.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "symm/bezout.hpp"
#include "symm/energy.hpp"
#include "symm/spectral.hpp"

namespace symm::testing {
namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};

ComplexVector random_state(Engine& rng, int m) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ComplexVector u;
  for (int k = 0; k < m; ++k) u.emplace_back(d(rng), d(rng));
  return u;
}

TEST(Propagate, Eigenvectors) {
  const auto a = sylvester_matrix(rp({1, 0, -1}));
  const auto tr = propagate(a, {1.0, 1.0}, 10.0, 100);
  EXPECT_EQ(tr.method, "eigen");
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const C e = std::exp(kI * tr.times[k]);
    EXPECT_NEAR(std::abs(tr.states[k][0] - e), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(tr.states[k][1] - e), 0.0, 1e-12);
  }
  const auto tm = propagate(a, {1.0, -1.0}, 10.0, 100);
  for (std::size_t k = 0; k < tm.times.size(); ++k) {
    const C e = std::exp(-kI * tm.times[k]);
    EXPECT_NEAR(std::abs(tm.states[k][0] - e), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(tm.states[k][1] + e), 0.0, 1e-12);
  }
}

TEST(Propagate, JordanBlock) {
  const auto tr = propagate(sylvester_matrix(rp({1, 0, 0})), {0.0, 1.0}, 5.0, 50);
  EXPECT_EQ(tr.method, "expm");
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    EXPECT_NEAR(std::abs(tr.states[k][0] - kI * tr.times[k]), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(tr.states[k][1] - 1.0), 0.0, 1e-12);
  }
}

// U(t) = (u, D_t u, …) for u = Σ c_k e^{iλ_k t}: the first component
// determines the rest, and D_t u = λ u per mode.
TEST(Propagate, FirstComponentDrivesTheRest) {
  Engine rng(81);
  for (int trial = 0; trial < 20; ++trial) {
    const auto roots = random_simple_roots(rng, uniform_int(rng, 2, 5));
    const auto a = sylvester_matrix(from_roots(roots));
    const auto tr = propagate(a, random_state(rng, static_cast<int>(roots.size())), 3.0, 600);
    // 5-point central difference of component j vs component j + 1 (D_t = −i d/dt).
    const double h = tr.times[1] - tr.times[0];
    for (std::size_t k = 2; k + 2 < tr.times.size(); k += 50)
      for (std::size_t j = 0; j + 1 < roots.size(); ++j) {
        const C d = (-tr.states[k + 2][j] + 8.0 * tr.states[k + 1][j] - 8.0 * tr.states[k - 1][j] + tr.states[k - 2][j]) /
                    (12.0 * h);
        EXPECT_NEAR(std::abs(-kI * d - tr.states[k][j + 1]), 0.0, 1e-5 * (1 + std::abs(tr.states[k][j + 1])));
      }
  }
}

TEST(Energy, Examples) {
  const auto a = sylvester_matrix(rp({1, 0, -1}));
  const auto tr = propagate(a, {1.0, 1.0}, 10.0, 100);
  const auto e1 = energy_series(rp({1, 0, -1}), rp({2, 0}), tr);
  for (double v : e1.values) EXPECT_NEAR(v, 4.0, 1e-12);
  const auto e2 = energy_series(rp({1, 0, -1}), rp({1, 0}), tr);
  for (double v : e2.values) EXPECT_NEAR(v, 2.0, 1e-12);
  const auto tj = propagate(sylvester_matrix(rp({1, 0, 0})), {0.0, 1.0}, 10.0, 100);
  const auto e3 = energy_series(rp({1, 0, 0}), rp({2, 0}), tj);
  for (double v : e3.values) EXPECT_NEAR(v, 2.0, 1e-10);
  EXPECT_THROW(energy_series(rp({1, 0, -1, 0}), rp({3, 0, -1}), tr), DegreeMismatchError);
}

TEST(Energy, ConservedForAnyQ) {
  Engine rng(82);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = uniform_int(rng, 2, 6);
    const auto prof = random_root_profile(rng, m, trial % 2 == 0 ? 1 : 3);
    const auto p = from_roots(prof);
    const auto q = random_polynomial(rng, m - 1);
    const auto tr = propagate(sylvester_matrix(p), random_state(rng, m), 10.0, 200);
    const auto es = energy_series(p, q, tr);
    const double tol = tr.method == "eigen" ? 1e-12 : 1e-6;
    // Relative to the size of the state, so a near-zero energy is not amplified.
    double scale = 0.0;
    for (const auto& u : tr.states)
      for (const auto& x : u) scale = std::max(scale, std::norm(x));
    double lo = es.values.front(), hi = lo;
    for (double v : es.values) lo = std::min(lo, v), hi = std::max(hi, v);
    const double hmax = max_abs(bezout_matrix(p, q).h.cast<double>());
    EXPECT_LE(hi - lo, tol * std::max(1.0, hmax * scale * m)) << "trial " << trial << " method " << tr.method;
    EXPECT_LE(es.max_imag, tol * std::max(1.0, hmax * scale * m));
  }
}

TEST(Energy, NonnegativeWhenSeparating) {
  Engine rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const auto prof = random_root_profile(rng, uniform_int(rng, 2, 6), 3);
    const auto p = from_roots(prof);
    const auto q = separating_q(rng, prof);
    ASSERT_TRUE(separates(p, q).separates);
    const auto tr = propagate(sylvester_matrix(p), random_state(rng, prof.degree()), 10.0, 100);
    for (double v : energy_series(p, q, tr).values) EXPECT_GE(v, -1e-9) << "trial " << trial;
  }
}

TEST(DerivativeIdentity, ClosedFormSignals) {
  const auto times = uniform_times(5.0, 100);
  EXPECT_LE(derivative_identity_check(rp({1, 0, -1}), rp({2, 0}), ExpSum{{1.0}, {2.0}}, times), 1e-9);
  EXPECT_LE(derivative_identity_check(rp({1, 0, -1}), rp({2, 0}), ExpSum{{1.0, 0.5}, {1.0, -1.0}}, times), 1e-12);
  EXPECT_LE(derivative_identity_check(rp({1, 0, -1, 0}), rp({3, 0, -1}), ExpSum{{1.0, 1.0}, {1.0, 3.0}}, times), 1e-8);
}

// With the time derivative taken by finite differences of ĥ(Du(t)) instead of
// the closed form the library uses.
TEST(DerivativeIdentity, AgreesWithFiniteDifferences) {
  const auto p = rp({1, 0, -1, 0});
  const auto q = rp({3, 0, -1});
  const ExpSum u{{C(1.0, 0.5), C(-0.3, 0.2)}, {0.7, 2.0}};
  const auto h = bezout_matrix(p, q).h.cast<double>();
  auto energy = [&](double t) {
    C acc = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        acc += h(i, j) * u.derivative(static_cast<int>(i), t) * std::conj(u.derivative(static_cast<int>(j), t));
    return acc;
  };
  const auto pf = p.cast<double>(), qf = q.cast<double>();
  for (double t : {0.0, 0.4, 1.3, 2.9}) {
    const double dt = 1e-3;
    const C lhs = (-energy(t + 2 * dt) + 8.0 * energy(t + dt) - 8.0 * energy(t - dt) + energy(t - 2 * dt)) / (12 * dt);
    const C pu = u.apply(pf, t), qu = u.apply(qf, t);
    const C rhs = kI * (pu * std::conj(qu) - std::conj(pu) * qu);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-8);
  }
}

TEST(ExpSum, DerivativesAreClosedForm) {
  const ExpSum u{{C(2.0, 0.0)}, {3.0}};
  EXPECT_NEAR(std::abs(u.derivative(0, 0.5) - 2.0 * std::exp(kI * 1.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(u.derivative(2, 0.5) - 18.0 * std::exp(kI * 1.5)), 0.0, 1e-13);
  // (D_t² − 9) u = 0.
  EXPECT_NEAR(std::abs(u.apply(FloatPolynomial{1.0, 0.0, -9.0}, 0.7)), 0.0, 1e-12);
}

TEST(ChainBound, Examples) {
  const auto times = uniform_times(5.0, 500);
  const auto a = chain_bound_check(rp({1, 0, 0, 0}), 0, ExpSum{{1.0}, {1.0}}, times);
  EXPECT_TRUE(a.holds);
  EXPECT_TRUE(a.constant_bound_holds);
  EXPECT_NEAR(a.c_j, 1.0 / 3.0, 1e-15);

  const auto tr = propagate(sylvester_matrix(rp({1, 0, -1})), {1.0, 1.0}, 5.0, 500);
  const auto b = chain_bound_check(rp({1, 0, -1}), 0, tr);
  EXPECT_TRUE(b.holds);
  EXPECT_LE(b.max_violation, 1e-9);

  EXPECT_THROW(chain_bound_check(rp({1, 0, -1}), 1, tr), std::exception);
}

TEST(ChainBound, RandomExponentialSums) {
  Engine rng(84);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  const auto times = uniform_times(4.0, 800);
  for (int trial = 0; trial < 20; ++trial) {
    ExpSum u;
    const int n = uniform_int(rng, 1, 4);
    for (int k = 0; k < n; ++k) {
      u.c.emplace_back(d(rng), d(rng));
      u.nu.push_back(d(rng));
    }
    for (int j = 0; j <= 1; ++j) {
      const auto r = chain_bound_check(rp({1, 0, -1, 0}), j, u, times);
      EXPECT_TRUE(r.holds) << "trial " << trial << " j " << j << " violation " << r.max_violation;
      EXPECT_TRUE(r.constant_bound_holds) << "trial " << trial << " j " << j;
    }
  }
}

TEST(InterpolationBound, RandomStrict) {
  Engine rng(85);
  for (int trial = 0; trial < 60; ++trial) {
    const auto prof = random_root_profile(rng, uniform_int(rng, 2, 6), 1);
    const auto p = from_roots(prof);
    const auto q = separating_q(rng, prof);
    const auto r = random_polynomial(rng, prof.degree() - 1);
    const auto ib = interpolation_bound(p, q, r);
    EXPECT_TRUE(ib.certificate.is_psd) << "trial " << trial;
    EXPECT_GE(ib.c, 0.0);
  }
}

TEST(InterpolationBound, SimpleCase) {
  // α = (1/2, 1/2), r = 1 ⇒ β = (−1/2, 1/2), C = 2·(1/4)/(1/2) = 1.
  const auto ib = interpolation_bound(rp({1, 0, -1}), rp({1, 0}), rp({1}));
  EXPECT_NEAR(ib.c, 1.0, 1e-12);
  EXPECT_TRUE(ib.certificate.is_psd);
}

}  // namespace
}  // namespace symm::testing
