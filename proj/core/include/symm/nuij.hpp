#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symm/polynomial.hpp"
#include "symm/real_roots.hpp"
#include "symm/root_profile.hpp"

namespace symm {

/// (1 + ε d/dζ)^n p = Σ_k C(n, k) ε^k p^{(k)}. n < 0 selects n = deg p − 1.
template <Scalar T>
Polynomial<T> nuij_transform(const Polynomial<T>& p, const T& epsilon, int applications = -1) {
  const int n = applications < 0 ? std::max(p.degree() - 1, 0) : applications;
  Polynomial<T> out = p;
  Polynomial<T> dk = p;
  T scale(1);
  for (int k = 1; k <= n; ++k) {
    dk = dk.derivative();
    if (dk.is_zero()) break;
    scale = scale * epsilon * T(n - k + 1) / T(k);
    out = out + scale * dk;
  }
  return out;
}

/// c_1, …, c_m with p = p_ε + Σ_ℓ c_ℓ ε^ℓ p_ε^{(ℓ)} for every p of degree m:
/// the series of (1 + x)^{−(m−1)}, c_ℓ = (−1)^ℓ C(m+ℓ−2, ℓ).
std::vector<Rational> nuij_inverse_coeffs(int m);

/// p_ε + Σ_ℓ c_ℓ ε^ℓ p_ε^{(ℓ)}; equals p exactly.
RationalPolynomial nuij_invert(const RationalPolynomial& p_eps, const Rational& epsilon, int m);

/// Root-gap constants c_2 = 1, c_{ℓ+1} = min_{2≤k≤ℓ} (k + c_ℓ − √((k + c_ℓ)² − 4c_ℓ)) / 2.
struct GapConstantTable {
  int m = 2;
  std::vector<double> c;  ///< c[ℓ] for ℓ = 2..m; c[0], c[1] unused

  double at(int ell) const { return c.at(static_cast<std::size_t>(ell)); }
  double last() const { return c.back(); }
};

GapConstantTable gap_constants(int m);

enum class Verdict { kPass, kMarginal, kFail };
std::string verdict_name(Verdict v);

/// One sample of the Nuij family at ε. p_ε is exact because a double ε
/// converts to a rational without rounding.
struct NuijFamilyPoint {
  double epsilon = 0.0;
  RationalPolynomial p_eps;
  RootProfile<double> roots_eps;
  RationalPolynomial q_eps;  ///< p − p_ε
};

NuijFamilyPoint nuij_family_point(const RationalPolynomial& p, double epsilon, double tol = kDefaultTol);

struct GapCheck {
  double epsilon = 0.0;
  double min_gap = 0.0;
  double c_m = 0.0;
  double margin = 0.0;  ///< max(1e−12, 1e−6·ε)
  Verdict verdict = Verdict::kFail;
  RootProfile<double> roots;
};

/// Minimum consecutive gap of the roots of p_ε against gap_constants(m).last()·ε.
/// A shortfall within the margin is reported as marginal.
GapCheck verify_gaps(const RationalPolynomial& p, double epsilon, double tol = kDefaultTol);

struct StageGap {
  int stage = 0;  ///< ℓ: the polynomial is (1 + εD)^{ℓ−1} p
  double min_gap_over_eps = 0.0;
  double c = 0.0;
  Verdict verdict = Verdict::kFail;
};

/// Gap law for the intermediate stages ℓ = 2..m, measured on the distinct
/// roots of (1 + εD)^{ℓ−1} p (roots still carrying multiplicity are merged).
/// The law is established for p = (ζ − a)^m; when p has several distinct
/// roots closer than ε an intermediate stage can fall short of c_ℓ ε while
/// the final stage still meets c_m ε.
std::vector<StageGap> verify_stage_gaps(const RationalPolynomial& p, double epsilon, double tol = kDefaultTol);

/// Roots of (1 + εD)^k p for k = 0..m−1.
std::vector<RootProfile<double>> stage_roots(const RationalPolynomial& p, double epsilon, double tol = kDefaultTol);

/// λ_1 ≤ μ_1 ≤ λ_2 ≤ … ≤ μ_{m−1} ≤ λ_m over flattened roots; strict uses <.
/// False when the degrees do not differ by one.
bool interlaces(const RootProfile<double>& upper, const RootProfile<double>& lower, bool strict);

/// Same-degree interlacing of consecutive Nuij stages:
/// next_1 ≤ prev_1 ≤ next_2 ≤ … ≤ next_m ≤ prev_m, each comparison allowing
/// tol·max(1, |x|) of slack for float roots.
bool interlaces_stagewise(const RootProfile<double>& prev, const RootProfile<double>& next, double tol = kDefaultTol);

/// 10^0, 10^−0.5, …, 10^−4.
std::vector<double> default_epsilon_grid();

/// n points from hi to lo, logarithmic or linear spacing.
std::vector<double> epsilon_grid(double hi, double lo, int n, bool logarithmic);

/// Parses "hi:lo:n" with an optional "(log)" or "(lin)" suffix; log by default.
std::vector<double> parse_epsilon_grid(const std::string& spec);

}  // namespace symm
