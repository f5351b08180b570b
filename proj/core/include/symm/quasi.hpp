#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symm/matrix.hpp"
#include "symm/nuij.hpp"
#include "symm/polynomial.hpp"

namespace symm {

/// Supplies the family member at ε: p_ε, its roots and q_ε = p − p_ε.
/// The Nuij family is the default; any strictly hyperbolic family fits.
using FamilySupplier = std::function<NuijFamilyPoint(double epsilon)>;

FamilySupplier nuij_family(const RationalPolynomial& p, double tol = kDefaultTol);

struct ConditionRow {
  double epsilon = 0.0;
  double cond1 = 0.0;  ///< min_j |p′_ε(λ_j(ε))| / ε^r
  double cond2 = 0.0;  ///< max_j |q_ε(λ_j(ε))| / (ε^s |p′_ε(λ_j(ε))|)
};

struct QuasiConditions {
  double r = 0.0;
  double s = 1.0;
  double c_lower = 0.0;  ///< inf of cond1 over the grid
  double C_upper = 0.0;  ///< sup of cond2 over the grid
  std::vector<ConditionRow> rows;
};

QuasiConditions check_conditions(const RationalPolynomial& p, const std::vector<double>& grid, double r, double s,
                                 double tol = kDefaultTol);
QuasiConditions check_conditions(const FamilySupplier& family, const std::vector<double>& grid, double r, double s);

/// A = A_ε + Q_ε with Q_ε = S_ε G_ε.
struct CommutatorDecomposition {
  double epsilon = 0.0;
  Matrix<Rational> a;
  Matrix<Rational> a_eps;
  Matrix<Rational> q_eps;   ///< zero except the last row −(b_m, …, b_1)
  Matrix<double> g_eps;
  Matrix<double> s_eps;     ///< zero except the last row −q_ε(λ_k)/|p′_ε(λ_k)|
  double qsg_residual = 0.0;  ///< ‖Q_ε − S_ε G_ε‖∞
};

CommutatorDecomposition commutator_decomposition(const RationalPolynomial& p, double epsilon,
                                                 double tol = kDefaultTol);

struct QuasiPoint {
  double epsilon = 0.0;
  double min_eigenvalue = 0.0;         ///< λ_min(H_ε)
  double lower_bound_constant = 0.0;   ///< λ_min(H_ε) / ε^{2r}
  double lower_bound_reciprocal = 0.0; ///< C in ε^{2r}|z|² ≤ C (H_ε z, z)
  double commutator_constant = 0.0;    ///< ‖G_ε^{−ᵀ} K_ε G_ε^{−1}‖₂ / ε^s
  double sampled_commutator = 0.0;     ///< best ratio found by random (z, w)
  bool a_eps_symmetrized = false;      ///< H_ε A_ε symmetric, exactly
  double qsg_residual = 0.0;
  double cond1 = 0.0;
  double cond2 = 0.0;
};

struct QuasiVerdict {
  double r = 0.0;
  double s = 1.0;
  std::vector<QuasiPoint> rows;
  double lower_variation = 0.0;       ///< max/min of lower_bound_constant over the grid
  double commutator_variation = 0.0;  ///< max/min of commutator_constant over the grid
  double lower_tail_slope = 0.0;      ///< decay rate of lower_bound_constant over the last decade
  double commutator_tail_slope = 0.0; ///< growth rate of commutator_constant over the last decade
  bool lower_bounded = false;
  bool commutator_bounded = false;
  bool samples_consistent = false;    ///< no sample exceeds the certified norm
  bool uniform_pass = false;
};

/// Largest log-log slope tolerated over the smallest decade of the grid. A
/// wrong exponent r or s shows up as a slope of at least 1.
inline constexpr double kMaxTailSlope = 0.5;

enum class Trend { kMustNotDecay, kMustNotGrow };

/// Worst log-log slope of `values` in the unwanted direction over the grid
/// points with ε ≤ 10·min ε, measured from the largest ε of that tail.
/// Infinite when a value is not finite or, for kMustNotDecay, not positive.
double tail_slope(const std::vector<double>& eps, const std::vector<double>& values, Trend trend);

QuasiVerdict verify_quasi(const RationalPolynomial& p, const std::vector<double>& grid, double r, double s,
                          int samples = 64, std::uint64_t seed = 0, double tol = kDefaultTol);

/// r = ρ − 1 and s = 1, ρ the largest root multiplicity of p.
QuasiVerdict quasi_for_multiplicity(const RationalPolynomial& p, const std::vector<double>& grid = default_epsilon_grid(),
                                    int samples = 64, std::uint64_t seed = 0, double tol = kDefaultTol);

}  // namespace symm
