#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symm/bezout.hpp"
#include "symm/linalg.hpp"
#include "symm/matrix.hpp"
#include "symm/polynomial.hpp"
#include "symm/real_roots.hpp"
#include "symm/root_profile.hpp"

namespace symm {

/// R(i, j) = λ_j^i for 0 ≤ i, j ≤ m−1. Repeated roots give a singular R.
template <Scalar T>
Matrix<T> vandermonde(std::span<const T> roots) {
  const std::size_t m = roots.size();
  Matrix<T> r(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    T power(1);
    for (std::size_t i = 0; i < m; ++i) {
      r(i, j) = power;
      power *= roots[j];
    }
  }
  return r;
}

/// G with g_ij = (−1)^{i+j} σ_{m−j,i} in 1-based indices; columns run over
/// ascending powers. Row k is (−1)^{k+m} times the ascending coefficients
/// of p_k = Π_{j≠k}(ζ − λ_j).
template <Scalar T>
Matrix<T> g_matrix(std::span<const T> roots) {
  const std::size_t m = roots.size();
  Matrix<T> g(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      T sigma = elementary_symmetric_excluding(roots, i, static_cast<int>(m - 1 - j));
      g(i, j) = (i + j) % 2 == 0 ? sigma : T(-sigma);
    }
  return g;
}

/// p_k = Π_{j≠k}(ζ − λ_j) for every k (0-based).
template <Scalar T>
std::vector<Polynomial<T>> deleted_root_factors(std::span<const T> roots) {
  std::vector<Polynomial<T>> out;
  out.reserve(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<T> rest;
    rest.reserve(roots.size() - 1);
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != k) rest.push_back(roots[j]);
    out.push_back(from_roots(std::span<const T>(rest)));
  }
  return out;
}

/// Δ(λ_1, …, λ_m) = Π_{a<b}(λ_b − λ_a), optionally skipping one index.
template <Scalar T>
T difference_product(std::span<const T> roots, std::optional<std::size_t> skip = std::nullopt) {
  T d(1);
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      if (skip && (a == *skip || b == *skip)) continue;
      d *= roots[b] - roots[a];
    }
  return d;
}

/// Lagrange weights α_k = q(λ_k)/p′(λ_k) over simple roots, with p′(λ_k)
/// taken in product form lead(p)·Π_{j≠k}(λ_k − λ_j).
/// Throws DivisionByZeroError on a repeated root.
template <Scalar T>
std::vector<T> lagrange_weights(const Polynomial<T>& p, const Polynomial<T>& q, std::span<const T> roots) {
  if (static_cast<int>(roots.size()) != p.degree())
    throw DegreeMismatchError("lagrange_weights: need one root per degree of p");
  std::vector<T> alpha;
  alpha.reserve(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    T dp = p.leading();
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != k) dp *= roots[k] - roots[j];
    if (is_zero(dp))
      throw DivisionByZeroError("lagrange_weights: p'(lambda_k) = 0, multiple root; use the general path");
    alpha.push_back(T(q(roots[k]) / dp));
  }
  return alpha;
}

/// Weights for h_{p,q} = Σ_k α_k φ_k(ζ)φ_k(η) with
/// φ_k = Π_j (ζ − λ_(j))^{r_j − δ_kj}, one per distinct root.
template <Scalar T>
struct GeneralWeights {
  RootProfile<T> roots;
  std::vector<T> alpha;
  std::vector<Polynomial<T>> phi;
};

/// α_k = b(λ_(k)) / a_k(λ_(k)) where q = b · Π (ζ − λ_(j))^{r_j−1} and
/// a_k = Π_{j≠k}(ζ − λ_(j)). Computed from the Taylor coefficient of q of
/// order r_k − 1 at λ_(k), so no polynomial division is needed:
///   α_k = q^{(r_k−1)}(λ_(k)) / (r_k−1)! / Π_{j≠k}(λ_(k) − λ_(j))^{r_j}.
template <Scalar T>
GeneralWeights<T> general_lagrange_weights(const Polynomial<T>& q, const RootProfile<T>& roots) {
  const auto& lam = roots.distinct();
  const auto& r = roots.multiplicities();
  GeneralWeights<T> out{roots, {}, {}};
  for (std::size_t k = 0; k < lam.size(); ++k) {
    T taylor = q.derivative(r[k] - 1)(lam[k]);
    for (int t = 2; t < r[k]; ++t) taylor /= T(t);
    T denom(1);
    std::vector<T> phi_roots;
    for (std::size_t j = 0; j < lam.size(); ++j) {
      const int power = r[j] - (j == k ? 1 : 0);
      phi_roots.insert(phi_roots.end(), static_cast<std::size_t>(power), lam[j]);
      if (j == k) continue;
      for (int t = 0; t < r[j]; ++t) denom *= lam[k] - lam[j];
    }
    out.alpha.push_back(T(taylor / denom));
    out.phi.push_back(from_roots(std::span<const T>(phi_roots)));
  }
  return out;
}

/// Σ_k α_k φ_k φ_kᵀ over ascending coefficient vectors.
template <Scalar T>
Matrix<T> weighted_gram(std::span<const T> weights, const std::vector<Polynomial<T>>& rows, std::size_t m) {
  Matrix<T> out(m, m);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::vector<T> v = rows[k].ascending(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out(i, j) += weights[k] * v[i] * v[j];
  }
  return out;
}

/// R, G, Λ, Δ_i, Δ and the p_k for a strictly hyperbolic p, together with
/// the Bézout matrix H of (p, q) and ᵗGΛG for comparison.
template <Scalar T>
struct FactorizationBundle {
  std::vector<T> roots;
  Matrix<T> r;
  Matrix<T> g;
  std::vector<T> lambda;
  std::vector<T> delta_i;
  T delta;
  std::vector<Polynomial<T>> p_k;
  Matrix<T> h;
  Matrix<T> gt_lambda_g;
  double residual = 0.0;  ///< ‖ᵗGΛG − H‖∞
};

template <Scalar T>
FactorizationBundle<T> factorization_bundle(const Polynomial<T>& p, const Polynomial<T>& q,
                                            std::span<const T> roots) {
  FactorizationBundle<T> b;
  b.roots.assign(roots.begin(), roots.end());
  b.r = vandermonde(roots);
  b.g = g_matrix(roots);
  b.lambda = lagrange_weights(p, q, roots);
  for (std::size_t i = 0; i < roots.size(); ++i) b.delta_i.push_back(difference_product(roots, i));
  b.delta = difference_product(roots);
  b.p_k = deleted_root_factors(roots);
  b.h = bezout_matrix(p, q).h;
  const Matrix<T> lam = Matrix<T>::diagonal(std::span<const T>(b.lambda));
  b.gt_lambda_g = b.g.transpose() * lam * b.g;
  b.residual = max_abs(Matrix<T>(b.gt_lambda_g - b.h));
  return b;
}

/// Float-root bundle for rational p, q: roots from real_roots, H converted
/// from the exact Bézout matrix.
FactorizationBundle<double> factorization_bundle(const RationalPolynomial& p, const RationalPolynomial& q,
                                                 double tol = kDefaultTol);

/// One entry of the merged sorted sequence of the roots of p and q.
struct InterlacingEntry {
  enum class Source { kP, kQ };
  double value;
  Source source;
  int multiplicity;
};

struct SeparationCertificate {
  bool separates = false;
  std::vector<InterlacingEntry> interlacing_witness;
  double constant_c = 0.0;  ///< min α_k / r_k over distinct roots of p
  std::vector<double> alpha;
  int leading_sign = 0;
  bool boundary = false;    ///< a root of q sits within tolerance of a root of p
  std::optional<std::string> failure_reason;
};

/// Tests whether q separates p: q carries each λ_(j) with multiplicity
/// exactly r_j − 1, its other s − 1 roots interlace the distinct λ_(j)
/// strictly (margin tol·scale), and its leading coefficient is positive.
/// Throws DegreeMismatchError unless deg q = m − 1, NonHyperbolicQError when
/// q has complex roots.
SeparationCertificate separates(const RationalPolynomial& p, const RationalPolynomial& q,
                                double tol = kDefaultTol);

struct PpPrimeBound {
  double c = 0.0;  ///< (Σ_k r_k² / α_k)^{−1}
  std::vector<double> alpha;
  PsdCertificate certificate;  ///< H_{p,p′} − c·p′p′ᵀ ⪰ 0
};

/// Constant c in ĥ_{p,p′}(z, z̄) ≥ c |p̂′(z)|², verified as a PSD statement.
PpPrimeBound hhat_pp_prime_bound(const RationalPolynomial& p, double tol = kDefaultTol);

}  // namespace symm
