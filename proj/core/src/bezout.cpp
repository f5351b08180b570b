#include "symm/bezout.hpp"

#include <cmath>

#include "symm/real_roots.hpp"

namespace symm {
namespace {

template <Scalar T>
ResultantReport<T> resultant_impl(const Polynomial<T>& p, const Polynomial<T>& q) {
  if (!p.is_monic()) throw NonMonicError("resultant");
  ResultantReport<T> out{determinant(bezout_matrix(p, q).h), 1.0, 0, 0, 0.0};
  const FloatPolynomial qf = q.template cast<double>();
  for (double lambda : real_roots(p).flattened()) out.product_form *= qf(lambda);
  out.sign_factor = resultant_sign_factor(p.degree());
  const double det = to_double(out.det_h);
  out.observed_sign = sign_of(det) * sign_of(out.product_form);
  out.relative_gap = std::fabs(det - out.sign_factor * out.product_form) / std::max(1.0, std::fabs(det));
  return out;
}

}  // namespace

ResultantReport<Rational> resultant(const RationalPolynomial& p, const RationalPolynomial& q) {
  return resultant_impl(p, q);
}

ResultantReport<double> resultant(const FloatPolynomial& p, const FloatPolynomial& q) {
  return resultant_impl(p, q);
}

PsdCertificate separation_lower_bound_certificate(const RationalPolynomial& p,
                                                  const RationalPolynomial& q, const Rational& c) {
  if (!p.is_monic()) throw NonMonicError("separation_lower_bound_check");
  const Matrix<Rational> h = bezout_matrix(p, q).h;
  const Matrix<Rational> gram = bezout_matrix(p, p.derivative()).h;
  return psd_check(Matrix<Rational>(h - c * gram));
}

PsdCertificate separation_lower_bound_certificate(const FloatPolynomial& p, const FloatPolynomial& q,
                                                  double c, double tol) {
  if (!p.is_monic()) throw NonMonicError("separation_lower_bound_check");
  const Matrix<double> h = bezout_matrix(p, q).h;
  const Matrix<double> gram = bezout_matrix(p, p.derivative()).h;
  return psd_check(Matrix<double>(h - c * gram), tol);
}

}  // namespace symm
