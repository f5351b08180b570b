#include "symm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace symm {
namespace {

Eigen::MatrixXd to_eigen(const Matrix<double>& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const Matrix<double>& a) {
  if (a.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(a), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<std::complex<double>> eigenvalues(const Matrix<double>& a) {
  if (a.rows() == 0) return {};
  Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), false);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double spectral_norm(const Matrix<double>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  return svd.singularValues()(0);
}

double min_singular_value(const Matrix<double>& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
  const auto& s = svd.singularValues();
  return s(s.size() - 1);
}

PsdCertificate psd_check(const Matrix<Rational>& h) {
  if (!h.is_square()) throw std::invalid_argument("psd_check: matrix not square");
  PsdCertificate cert;
  cert.method = "ldl-exact";
  if (!is_zero(asymmetry(h))) {
    cert.reason = "matrix is not symmetric";
    return cert;
  }
  const std::size_t n = h.rows();
  Matrix<Rational> work = h;
  std::vector<bool> done(n, false);
  bool psd = true;
  for (std::size_t step = 0; step < n && psd; ++step) {
    // Positive diagonal pivot with the largest value keeps numbers small.
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && sgn(work(i, i)) > 0 && (piv == n || work(i, i) > work(piv, piv))) piv = i;
    if (piv == n) {
      for (std::size_t i = 0; i < n && psd; ++i) {
        if (done[i]) continue;
        if (sgn(work(i, i)) < 0) {
          cert.pivots.push_back(work(i, i));
          cert.pivot_signs.push_back(-1);
          cert.reason = "negative pivot";
          psd = false;
        }
      }
      for (std::size_t i = 0; i < n && psd; ++i)
        for (std::size_t j = 0; j < n && psd; ++j)
          if (!done[i] && !done[j] && i != j && !is_zero(work(i, j))) {
            cert.reason = "zero pivot with nonzero coupling";
            psd = false;
          }
      if (psd)
        for (std::size_t i = 0; i < n; ++i)
          if (!done[i]) {
            cert.pivots.emplace_back(0);
            cert.pivot_signs.push_back(0);
            done[i] = true;
          }
      break;
    }
    const Rational d = work(piv, piv);
    cert.pivots.push_back(d);
    cert.pivot_signs.push_back(1);
    ++cert.rank;
    done[piv] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || is_zero(work(i, piv))) continue;
      Rational f = work(i, piv) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) work(i, j) -= f * work(piv, j);
    }
  }
  cert.is_psd = psd;
  const std::vector<double> ev = symmetric_eigenvalues(h.cast<double>());
  cert.min_eigenvalue = ev.empty() ? 0.0 : ev.front();
  return cert;
}

PsdCertificate psd_check(const Matrix<double>& h, double tol) {
  if (!h.is_square()) throw std::invalid_argument("psd_check: matrix not square");
  PsdCertificate cert;
  cert.method = "eigen-float";
  const double scale = std::max(1.0, max_abs(h));
  if (asymmetry(h) > 1e-12 * scale) {
    cert.reason = "matrix is not symmetric";
    return cert;
  }
  const std::vector<double> ev = symmetric_eigenvalues(h);
  cert.min_eigenvalue = ev.empty() ? 0.0 : ev.front();
  const double floor = tol * scale;
  for (double e : ev) {
    cert.pivot_signs.push_back(e > floor ? 1 : (e < -floor ? -1 : 0));
    if (e > floor) ++cert.rank;
  }
  cert.is_psd = cert.min_eigenvalue >= -floor;
  if (!cert.is_psd) cert.reason = "negative eigenvalue";
  return cert;
}

bool is_positive_definite(const Matrix<Rational>& h) {
  const PsdCertificate c = psd_check(h);
  return c.is_psd && c.rank == static_cast<int>(h.rows());
}

ComplexVector expm_apply(const Matrix<double>& re, const Matrix<double>& im, const ComplexVector& v) {
  const std::size_t n = re.rows();
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = {re(i, j), im(i, j)};
  Eigen::MatrixXcd e = m.exp();
  Eigen::VectorXcd x(n);
  for (std::size_t i = 0; i < n; ++i) x(i) = v[i];
  Eigen::VectorXcd y = e * x;
  return {y.data(), y.data() + y.size()};
}

}  // namespace symm
