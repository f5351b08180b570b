#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "symm/errors.hpp"
#include "symm/linalg.hpp"
#include "symm/matrix.hpp"
#include "symm/polynomial.hpp"
#include "symm/scalar.hpp"

namespace symm {

/// Coefficient matrix of the Bézout form
///   h(ζ, η) = (p(ζ)q(η) − p(η)q(ζ)) / (ζ − η) = Σ h_ij ζ^i η^j,
/// indices 0 … m−1 over ascending powers.
template <Scalar T>
struct BezoutMatrix {
  Matrix<T> h;
  Polynomial<T> p;
  Polynomial<T> q;

  std::size_t size() const noexcept { return h.rows(); }
};

/// Companion matrix reducing p(D_t)u = 0 to D_tU = AU: ones on the
/// superdiagonal, last row (−a_m, …, −a_1).
template <Scalar T>
struct SylvesterMatrix {
  Matrix<T> a;
  Polynomial<T> source;

  std::size_t size() const noexcept { return a.rows(); }
};

/// Bézout matrix by two-variable synthetic division of p(ζ)q(η) − p(η)q(ζ)
/// by ζ − η. Requires deg p = m ≥ 1 and deg q ≤ m − 1 (shorter q is padded).
template <Scalar T>
BezoutMatrix<T> bezout_matrix(const Polynomial<T>& p, const Polynomial<T>& q) {
  const int m = p.degree();
  if (m < 1) throw DegreeMismatchError("bezout_matrix: deg p must be at least 1");
  if (q.degree() > m - 1)
    throw DegreeMismatchError("bezout_matrix: deg q must not exceed deg p - 1");
  const std::size_t n = static_cast<std::size_t>(m);
  const std::vector<T> pa = p.ascending(n + 1);
  const std::vector<T> qa = q.is_zero() ? std::vector<T>(n + 1, T(0)) : q.ascending(n + 1);

  // numer[i][j]: coefficient of ζ^i η^j; antisymmetric.
  std::vector<std::vector<T>> numer(n + 1, std::vector<T>(n + 1, T(0)));
  double scale = 0.0;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      numer[i][j] = pa[i] * qa[j] - qa[i] * pa[j];
      scale = std::max(scale, abs_value(to_double(numer[i][j])));
    }

  // Synthetic division in ζ by the root η: b_{i−1}(η) = N_i(η) + η·b_i(η).
  // Rows carry one spare η-slot so that an inexact division shows up.
  std::vector<std::vector<T>> rows(n, std::vector<T>(n + 1, T(0)));
  std::vector<T> carry(n + 2, T(0));
  for (std::size_t i = n; i >= 1; --i) {
    std::vector<T> next(n + 2, T(0));
    for (std::size_t j = 0; j <= n; ++j) next[j] = numer[i][j];
    for (std::size_t j = 0; j + 1 < n + 2; ++j) next[j + 1] += carry[j];
    for (std::size_t j = 0; j <= n; ++j) rows[i - 1][j] = next[j];
    carry = std::move(next);
  }
  // Remainder N_0(η) + η·b_0(η) and the η^m slot of every row must vanish.
  std::vector<T> rem(n + 2, T(0));
  for (std::size_t j = 0; j <= n; ++j) rem[j] = numer[0][j];
  for (std::size_t j = 0; j + 1 < n + 2; ++j) rem[j + 1] += carry[j];
  auto nonzero = [&](const T& v) {
    if constexpr (kIsExact<T>) {
      return !is_zero(v);
    } else {
      return abs_value(v) > 1e-12 * std::max(1.0, scale);
    }
  };
  for (const T& v : rem)
    if (nonzero(v)) throw NonzeroRemainderError("bezout_matrix: division by (zeta - eta) not exact");
  for (const auto& r : rows)
    if (nonzero(r[n])) throw NonzeroRemainderError("bezout_matrix: quotient degree overflow");

  BezoutMatrix<T> out{Matrix<T>(n, n), p, q};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.h(i, j) = rows[i][j];
  return out;
}

template <Scalar T>
SylvesterMatrix<T> sylvester_matrix(const Polynomial<T>& p) {
  if (!p.is_monic()) throw NonMonicError("sylvester_matrix");
  const int m = p.degree();
  if (m < 1) throw DegreeMismatchError("sylvester_matrix: degree must be at least 1");
  const std::size_t n = static_cast<std::size_t>(m);
  SylvesterMatrix<T> out{Matrix<T>(n, n), p};
  for (std::size_t i = 0; i + 1 < n; ++i) out.a(i, i + 1) = T(1);
  for (std::size_t j = 0; j < n; ++j) out.a(n - 1, j) = -p.coeff(static_cast<int>(j));
  return out;
}

/// Max-norm of HA − ᵗ(HA).
template <Scalar T>
T symmetrization_defect(const Matrix<T>& h, const Matrix<T>& a) {
  if (h.rows() != a.rows() || h.cols() != a.cols())
    throw std::invalid_argument("symmetrization_defect: dimensions differ");
  return asymmetry(Matrix<T>(h * a));
}

template <Scalar T>
T symmetrization_defect(const BezoutMatrix<T>& h, const SylvesterMatrix<T>& a) {
  return symmetrization_defect(h.h, a.a);
}

/// PSD verdict: exact LDL certificate for rationals, smallest eigenvalue
/// with tolerance for doubles.
inline PsdCertificate psd_check(const BezoutMatrix<Rational>& h) { return psd_check(h.h); }
inline PsdCertificate psd_check(const BezoutMatrix<double>& h, double tol) { return psd_check(h.h, tol); }

/// det of the Bézout matrix of (p, p′), i.e. Π_{i<j}(λ_i − λ_j)².
template <Scalar T>
T discriminant(const Polynomial<T>& p) {
  if (!p.is_monic()) throw NonMonicError("discriminant");
  return determinant(bezout_matrix(p, p.derivative()).h);
}

/// Sign σ(m) in det H = σ(m) · Π_j q(λ_j), confirmed by brute force over
/// m = 2 … 5: σ(m) = (−1)^{m(m−1)/2}. It comes from
/// Π_j p′(λ_j) = (−1)^{m(m−1)/2} Δ².
inline int resultant_sign_factor(int m) noexcept { return (m * (m - 1) / 2) % 2 == 0 ? 1 : -1; }

template <Scalar T>
struct ResultantReport {
  T det_h;               ///< det of the Bézout matrix of (p, q)
  double product_form;   ///< Π_j q(λ_j) over float roots of p
  int sign_factor;       ///< frozen σ(m)
  int observed_sign;     ///< sign(det_h · product_form); 0 when either vanishes
  double relative_gap;   ///< |det_h − σ(m)·product_form| / max(1, |det_h|)
};

/// Requires p monic and hyperbolic (roots are extracted for the product form).
ResultantReport<Rational> resultant(const RationalPolynomial& p, const RationalPolynomial& q);
ResultantReport<double> resultant(const FloatPolynomial& p, const FloatPolynomial& q);

/// Certificate for H_{p,q} − c·H_{p,p′} ⪰ 0. H_{p,p′} equals ᵗGG, the
/// matrix of Σ_k |p̂_k(z)|², so this is the separation lower bound.
PsdCertificate separation_lower_bound_certificate(const RationalPolynomial& p,
                                                  const RationalPolynomial& q, const Rational& c);
PsdCertificate separation_lower_bound_certificate(const FloatPolynomial& p, const FloatPolynomial& q,
                                                  double c, double tol);

inline bool separation_lower_bound_check(const RationalPolynomial& p, const RationalPolynomial& q,
                                         const Rational& c) {
  return separation_lower_bound_certificate(p, q, c).is_psd;
}
inline bool separation_lower_bound_check(const FloatPolynomial& p, const FloatPolynomial& q, double c,
                                         double tol) {
  return separation_lower_bound_certificate(p, q, c, tol).is_psd;
}

}  // namespace symm
