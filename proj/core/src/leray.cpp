#include "symm/leray.hpp"

#include <algorithm>

#include "symm/linalg.hpp"
#include "symm/spectral.hpp"

namespace symm {

LeraySymmetrizer leray_symmetrizer(const RationalPolynomial& p) {
  if (!p.is_monic()) throw NonMonicError("leray_symmetrizer");
  LeraySymmetrizer out;
  out.s = power_sum_matrix(p);
  out.b = adjugate(out.s);
  out.det_s = determinant(out.s);
  out.ba_defect = asymmetry(Matrix<Rational>(out.b * sylvester_matrix(p).a));
  out.positive_definite = is_positive_definite(out.b);
  return out;
}

HBRelation h_b_relation_check(const RationalPolynomial& p, double tol) {
  if (!p.is_monic()) throw NonMonicError("h_b_relation_check");
  const RootProfile<double> prof = real_roots(p, tol);
  if (!prof.is_simple()) throw MultipleRootError("h_b_relation_check: p must be strictly hyperbolic");

  // Exact arithmetic on the rational values of the float roots.
  std::vector<Rational> lam;
  for (double x : prof.flattened()) lam.push_back(to_rational(x));
  const std::size_t m = lam.size();
  const Matrix<Rational> r = vandermonde(std::span<const Rational>(lam));
  const Matrix<Rational> g = g_matrix(std::span<const Rational>(lam));
  std::vector<Rational> d(m), inv_dp2(m), inv_d(m);
  for (std::size_t k = 0; k < m; ++k) {
    Rational prod(1);
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) prod *= lam[k] - lam[j];
    d[k] = (k + 1 + m) % 2 == 0 ? prod : Rational(-prod);
    inv_d[k] = 1 / d[k];
    inv_dp2[k] = 1 / (prod * prod);
  }
  // R^{−1} = diag(1/d) G, since G R = diag(d).
  const Matrix<Rational> r_inv = Matrix<Rational>::diagonal(std::span<const Rational>(inv_d)) * g;
  const Matrix<Rational> h = bezout_matrix(p, p.derivative()).h;
  const Matrix<Rational> lhs = h * r * Matrix<Rational>::diagonal(std::span<const Rational>(inv_dp2)) * r_inv;

  const LeraySymmetrizer ls = leray_symmetrizer(p);
  const Rational inv_det = 1 / ls.det_s;
  HBRelation out;
  out.lhs = lhs.cast<double>();
  out.rhs = Matrix<Rational>(inv_det * ls.b).cast<double>();
  out.residual = max_abs(Matrix<double>(out.lhs - out.rhs));
  out.relative_residual = out.residual / std::max(1.0, max_abs(out.rhs));
  return out;
}

}  // namespace symm
