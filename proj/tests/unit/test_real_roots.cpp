#include <cmath>

#include <gtest/gtest.h>

#include "common.hpp"
#include "generators.hpp"
#include "symm/bezout.hpp"
#include "symm/real_roots.hpp"

namespace symm::testing {
namespace {

void expect_profile(const RootProfile<double>& got, std::vector<double> roots, std::vector<int> mult) {
  ASSERT_EQ(got.distinct().size(), roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    EXPECT_NEAR(got.distinct()[j], roots[j], 1e-9);
    EXPECT_EQ(got.multiplicities()[j], mult[j]);
  }
}

TEST(RealRoots, SmallCases) {
  expect_profile(real_roots(rp({1, 0, -1})), {-1, 1}, {1, 1});
  expect_profile(real_roots(rp({1, 0, 0})), {0}, {2});
  expect_profile(real_roots(rp({1, 0, -1, 0})), {-1, 0, 1}, {1, 1, 1});
  expect_profile(real_roots(rp({1, -1}) * rp({1, -1}) * rp({1, -1}) * rp({1, -1}) * rp({1, -1}) * rp({1, 2})), {-2, 1},
                 {1, 5});
}

TEST(RealRoots, NonHyperbolicThrows) {
  EXPECT_THROW(real_roots(rp({1, 0, 1})), NonHyperbolicError);
  EXPECT_THROW(real_roots(rp({1, 0, 0, 1})), NonHyperbolicError);
}

TEST(RealRoots, FloatBackend) {
  const FloatPolynomial p{1.0, 0.0, -2.0};
  expect_profile(real_roots(p), {-std::sqrt(2.0), std::sqrt(2.0)}, {1, 1});
}

// Rational roots from a lattice with spacing 1/4 and multiplicities up to 3.
TEST(RealRoots, RecoversRandomProfiles) {
  Engine rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = uniform_int(rng, 1, 8);
    const auto prof = random_root_profile(rng, m, 3);
    const auto got = real_roots(from_roots(prof));
    ASSERT_EQ(got.distinct().size(), prof.distinct().size()) << "trial " << trial;
    for (std::size_t j = 0; j < got.distinct().size(); ++j) {
      EXPECT_NEAR(got.distinct()[j], prof.distinct()[j].get_d(), 1e-9);
      EXPECT_EQ(got.multiplicities()[j], prof.multiplicities()[j]);
    }
  }
}

TEST(RealRoots, SortedAndDegreeConsistent) {
  Engine rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = uniform_int(rng, 1, 8);
    const auto got = real_roots(from_roots(random_root_profile(rng, m, 4)));
    EXPECT_EQ(got.degree(), m);
    for (std::size_t j = 1; j < got.distinct().size(); ++j) EXPECT_LT(got.distinct()[j - 1], got.distinct()[j]);
  }
}

TEST(Hyperbolicity, Examples) {
  const auto a = is_hyperbolic(rp({1, 0, -1}));
  EXPECT_TRUE(a.is_hyperbolic);
  EXPECT_TRUE(a.is_strict);
  const auto b = is_hyperbolic(rp({1, 0, 1}));
  EXPECT_FALSE(b.is_hyperbolic);
  EXPECT_FALSE(b.failure_reason.empty());
  const auto c = is_hyperbolic(rp({1, 0, 0}));
  EXPECT_TRUE(c.is_hyperbolic);
  EXPECT_FALSE(c.is_strict);
}

TEST(Hyperbolicity, SturmAgreesWithHermite) {
  Engine rng(23);
  int hyperbolic_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    bool expected = false;
    const auto p = random_mixed(rng, uniform_int(rng, 1, 6), expected);
    const auto v = is_hyperbolic(p);
    EXPECT_EQ(v.sturm_verdict, v.hermite_verdict) << "trial " << trial;
    EXPECT_EQ(v.is_hyperbolic, expected) << "trial " << trial;
    const bool hermite = psd_check(bezout_matrix(p, derivative(p))).is_psd;
    EXPECT_EQ(hermite, expected) << "trial " << trial;
    hyperbolic_count += expected;
  }
  EXPECT_GT(hyperbolic_count, 300);
  EXPECT_LT(hyperbolic_count, 700);
}

TEST(Hyperbolicity, StrictIffSimple) {
  Engine rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const auto prof = random_root_profile(rng, uniform_int(rng, 1, 6), 3);
    const auto v = is_hyperbolic(from_roots(prof));
    EXPECT_TRUE(v.is_hyperbolic);
    EXPECT_EQ(v.is_strict, max_multiplicity(prof) == 1);
  }
}

TEST(Sturm, CountsDistinctRoots) {
  EXPECT_EQ(count_distinct_real_roots(rp({1, 0, -1, 0})), 3);
  EXPECT_EQ(count_distinct_real_roots(rp({1, 0, 0})), 1);
  EXPECT_EQ(count_distinct_real_roots(rp({1, 0, 1})), 0);
  EXPECT_EQ(count_distinct_real_roots(rp({1, 0, -1, 0}), Rational(-1, 2), Rational(2)), 2);
}

TEST(Squarefree, Factors) {
  const auto p = rp({1, -1}) * rp({1, -1}) * rp({1, 2});
  const auto f = squarefree_factors(p);
  RationalPolynomial prod = rp({1});
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t e = 0; e <= k; ++e) prod = prod * f[k];
  EXPECT_EQ(prod.monic(), p);
}

}  // namespace
}  // namespace symm::testing
