#pragma once

#include <optional>

#include "symm/bezout.hpp"
#include "symm/matrix.hpp"
#include "symm/polynomial.hpp"
#include "symm/real_roots.hpp"

namespace symm {

/// S with s_ij = P_{i+j}, from Newton power sums; no roots involved.
template <Scalar T>
Matrix<T> power_sum_matrix(const Polynomial<T>& p) {
  const int m = p.degree();
  if (m < 1) throw DegreeMismatchError("power_sum_matrix: degree must be at least 1");
  const std::vector<T> ps = power_sums(p, 2 * m - 2);
  const std::size_t n = static_cast<std::size_t>(m);
  Matrix<T> s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = ps[i + j];
  return s;
}

struct LeraySymmetrizer {
  Matrix<Rational> s;
  Matrix<Rational> b;       ///< adjugate of S, so defined for singular S
  Rational det_s;           ///< Δ²
  Rational ba_defect;       ///< max |(BA)_ij − (BA)_ji|
  bool positive_definite = false;
};

LeraySymmetrizer leray_symmetrizer(const RationalPolynomial& p);

struct HBRelation {
  Matrix<double> lhs;  ///< H R diag(p′(λ_k)^{−2}) R^{−1}
  Matrix<double> rhs;  ///< Δ^{−2} B
  double residual = 0.0;           ///< ‖lhs − rhs‖∞
  double relative_residual = 0.0;  ///< residual / max(1, ‖rhs‖∞)
};

/// Throws MultipleRootError unless p is strictly hyperbolic.
HBRelation h_b_relation_check(const RationalPolynomial& p, double tol = kDefaultTol);

}  // namespace symm
