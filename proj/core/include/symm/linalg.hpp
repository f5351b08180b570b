#pragma once

#include <complex>
#include <string>
#include <vector>

#include "symm/matrix.hpp"
#include "symm/scalar.hpp"

namespace symm {

/// Outcome of a positive-semidefiniteness test.
///
/// Exact path: symmetric LDLᵀ with diagonal pivoting; `pivots` holds the
/// diagonal of D in elimination order and `pivot_signs` their signs. The
/// matrix is PSD iff no pivot is negative and elimination never meets a zero
/// diagonal with a nonzero off-diagonal in its row.
///
/// Float path: smallest eigenvalue compared against −tol·max(1, ‖H‖∞).
struct PsdCertificate {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
  int rank = 0;
  std::vector<Rational> pivots;
  std::vector<int> pivot_signs;
  std::string method;
  std::string reason;  // why the check failed, empty on success
};

PsdCertificate psd_check(const Matrix<Rational>& h);
PsdCertificate psd_check(const Matrix<double>& h, double tol);

/// PSD with full rank, certified exactly.
bool is_positive_definite(const Matrix<Rational>& h);

/// Ascending eigenvalues of a symmetric matrix.
std::vector<double> symmetric_eigenvalues(const Matrix<double>& a);

/// Eigenvalues of a general real matrix.
std::vector<std::complex<double>> eigenvalues(const Matrix<double>& a);

/// Largest and smallest singular values.
double spectral_norm(const Matrix<double>& a);
double min_singular_value(const Matrix<double>& a);

using ComplexVector = std::vector<std::complex<double>>;

/// e^{tM} for a complex matrix given as real and imaginary parts, applied to
/// a vector. Scaling and squaring.
ComplexVector expm_apply(const Matrix<double>& re, const Matrix<double>& im, const ComplexVector& v);

}  // namespace symm
