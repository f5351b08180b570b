#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symm/polynomial.hpp"
#include "symm/root_profile.hpp"

namespace symm {

inline constexpr double kDefaultTol = 1e-9;

/// Sturm chain p, p′, −rem(p, p′), … ending at a multiple of gcd(p, p′).
std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p);

/// Number of distinct real roots on the whole line.
int count_distinct_real_roots(const RationalPolynomial& p);

/// Number of distinct real roots in the half-open interval (lo, hi].
int count_distinct_real_roots(const RationalPolynomial& p, const Rational& lo, const Rational& hi);

/// Yun's square-free decomposition: factors[k−1] is the monic product of
/// the linear factors of multiplicity exactly k (possibly constant 1).
std::vector<RationalPolynomial> squarefree_factors(const RationalPolynomial& p);

/// Sorted real roots with multiplicities.
///
/// Multiplicities come from the exact square-free decomposition of the
/// coefficients. Each square-free factor is located with eigenvalues of its
/// balanced companion matrix and then refined by a bracketed Newton/bisection
/// iteration whose sign tests evaluate the polynomial exactly. Roots closer
/// than tol·max(1, |λ|) are merged, summing multiplicities.
///
/// Throws NonHyperbolicError when an eigenvalue has imaginary part above
/// tol·scale.
RootProfile<double> real_roots(const RationalPolynomial& p, double tol = kDefaultTol);

/// Float coefficients are converted exactly, then handled as above.
RootProfile<double> real_roots(const FloatPolynomial& p, double tol = kDefaultTol);

enum class HyperbolicityMethod { kSturm, kHermitePsd };

struct HyperbolicityVerdict {
  bool is_hyperbolic = false;
  bool is_strict = false;
  std::optional<RootProfile<double>> witness;
  std::string failure_reason;
  HyperbolicityMethod method = HyperbolicityMethod::kSturm;
  bool sturm_verdict = false;
  bool hermite_verdict = false;
};

/// Decides real-rootedness twice: Sturm root count against the number of
/// distinct roots, and the Hermite criterion (Bézout matrix of (p, p′) is
/// PSD) with an exact LDL certificate. The two must agree.
HyperbolicityVerdict is_hyperbolic(const RationalPolynomial& p);
HyperbolicityVerdict is_hyperbolic(const FloatPolynomial& p);

}  // namespace symm
