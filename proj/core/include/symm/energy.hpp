#pragma once

#include <complex>
#include <string>
#include <vector>

#include "symm/bezout.hpp"
#include "symm/linalg.hpp"
#include "symm/polynomial.hpp"
#include "symm/real_roots.hpp"

namespace symm {

/// Samples of U = (u, D_t u, …, D_t^{m−1} u) solving D_t U = A U, i.e.
/// dU/dt = iAU, with D_t = −i d/dt.
struct Trajectory {
  std::vector<double> times;  ///< uniform grid on [0, T]
  std::vector<ComplexVector> states;
  Matrix<double> generator;
  std::string method;  ///< "eigen" for R diag(e^{itλ}) R^{−1}, "expm" otherwise
};

/// Strictly hyperbolic p propagates through its eigenbasis; otherwise each
/// sample is e^{itA} U0 from the dense matrix exponential.
Trajectory propagate(const SylvesterMatrix<Rational>& a, const ComplexVector& u0, double t_end, int steps,
                     double tol = kDefaultTol);

struct EnergySeries {
  std::vector<double> times;
  std::vector<double> values;  ///< Re (H U(t), U(t))
  double max_imag = 0.0;       ///< largest |Im (H U, U)|, zero up to rounding
  double relative_drift = 0.0; ///< (max − min) / max |value|
};

/// (H U(t), U(t)) with H = bezout_matrix(p, q). Throws DegreeMismatchError
/// when the trajectory dimension is not deg p.
EnergySeries energy_series(const RationalPolynomial& p, const RationalPolynomial& q, const Trajectory& traj);

/// u(t) = Σ c_k e^{iν_k t}; D_t^j u = Σ c_k ν_k^j e^{iν_k t} in closed form.
struct ExpSum {
  std::vector<std::complex<double>> c;
  std::vector<double> nu;

  std::complex<double> derivative(int order, double t) const;
  std::complex<double> apply(const FloatPolynomial& f, double t) const;  ///< f(D_t) u
};

/// Sample times 0, T/n, …, T.
std::vector<double> uniform_times(double t_end, int steps);

/// max_t |d/dt ĥ_{p,q}(Du) − i(p(D_t)u · conj(q(D_t)u) − conj(p(D_t)u) · q(D_t)u)|,
/// the left side from Σ_{k,l} i(ν_k − ν_l) c_k c̄_l h(ν_k, ν_l) e^{i(ν_k − ν_l)t}.
double derivative_identity_check(const RationalPolynomial& p, const RationalPolynomial& q, const ExpSum& u,
                                 const std::vector<double>& times);

struct ChainBound {
  int j = 0;
  int samples = 0;
  bool holds = false;             ///< both inequalities at every sample
  double max_violation = 0.0;     ///< largest LHS − RHS − fd_error, ≤ 0 on success
  double c_j = 0.0;               ///< constant for the lower bound, 1/(m − j)
  bool constant_bound_holds = false;
  double constant_bound_slack = 0.0;  ///< min of ĥ − c_j |p^{(j+1)}(D_t)u|²
};

/// d/dt ĥ_{p^{(j)},p^{(j+1)}}(Du) ≤ 2 |p^{(j)}(D_t)u| |p^{(j+1)}(D_t)u| with the
/// time derivative from 5-point central differences, and
/// c_j |p^{(j+1)}(D_t)u|² ≤ ĥ_{p^{(j)},p^{(j+1)}}(Du).
/// Requires 0 ≤ j ≤ deg p − 2 and a uniform time grid.
ChainBound chain_bound_check(const RationalPolynomial& p, int j, const Trajectory& traj);
ChainBound chain_bound_check(const RationalPolynomial& p, int j, const ExpSum& u, const std::vector<double>& times);

struct InterpolationBound {
  double c = 0.0;  ///< Σ_k β_k² / α_k with β_k = r(λ_k)/p′(λ_k), α_k = q(λ_k)/p′(λ_k)
  PsdCertificate certificate;  ///< C·H − r rᵀ ⪰ 0
};

/// C ĥ_{p,q}(z, z̄) ≥ |r̂(z)|² for strictly hyperbolic p, q separating p and
/// deg r ≤ m − 1, certified as a PSD statement.
InterpolationBound interpolation_bound(const RationalPolynomial& p, const RationalPolynomial& q,
                                       const RationalPolynomial& r, double tol = kDefaultTol);

}  // namespace symm
