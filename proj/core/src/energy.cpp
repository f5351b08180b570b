#include "symm/energy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "symm/spectral.hpp"

namespace symm {
namespace {

using cd = std::complex<double>;

/// (H w, w) over the first H.rows() entries of w.
cd quadratic_form(const Matrix<double>& h, std::span<const cd> w) {
  cd acc(0.0, 0.0);
  for (std::size_t i = 0; i < h.rows(); ++i) {
    cd row(0.0, 0.0);
    for (std::size_t j = 0; j < h.cols(); ++j) row += h(i, j) * w[j];
    acc += std::conj(w[i]) * row;
  }
  return acc;
}

/// f(D_t)u from the derivative stack w = (u, D_t u, …).
cd apply_stack(const FloatPolynomial& f, std::span<const cd> w) {
  cd acc(0.0, 0.0);
  for (int i = 0; i <= f.degree(); ++i) acc += f.coeff(i) * w[static_cast<std::size_t>(i)];
  return acc;
}

ChainBound chain_bound_impl(const RationalPolynomial& p, int j, const std::vector<double>& times,
                            const std::function<std::vector<cd>(std::size_t)>& stack) {
  const int m = p.degree();
  if (j < 0 || j > m - 2) throw std::invalid_argument("chain_bound_check: need 0 <= j <= deg p - 2");
  if (times.size() < 5) throw std::invalid_argument("chain_bound_check: need at least 5 samples");
  const RationalPolynomial pj = p.derivative(j);
  const RationalPolynomial pj1 = pj.derivative();
  const Matrix<double> h = bezout_matrix(pj, pj1).h.cast<double>();
  const FloatPolynomial pf = pj.cast<double>();
  const FloatPolynomial qf = pj1.cast<double>();

  ChainBound out;
  out.j = j;
  out.c_j = hhat_pp_prime_bound(pj.monic()).c;

  const std::size_t n = times.size();
  std::vector<double> energy(n), bound(n), qnorm2(n);
  double scale = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const std::vector<cd> w = stack(t);
    energy[t] = quadratic_form(h, w).real();
    const cd pu = apply_stack(pf, w);
    const cd qu = apply_stack(qf, w);
    bound[t] = 2.0 * std::abs(pu) * std::abs(qu);
    qnorm2[t] = std::norm(qu);
    scale = std::max(scale, std::fabs(energy[t]));
  }

  const double step = times[1] - times[0];
  const double roundoff = 1e-12 * std::max(1.0, scale) / step;
  out.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 2; t + 2 < n; ++t) {
    const double d5 = (-energy[t + 2] + 8.0 * energy[t + 1] - 8.0 * energy[t - 1] + energy[t - 2]) / (12.0 * step);
    const double d3 = (energy[t + 1] - energy[t - 1]) / (2.0 * step);
    const double fd_error = std::fabs(d5 - d3) + roundoff;
    out.max_violation = std::max(out.max_violation, d5 - bound[t] - fd_error);
    ++out.samples;
  }
  out.constant_bound_slack = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < n; ++t)
    out.constant_bound_slack = std::min(out.constant_bound_slack, energy[t] - out.c_j * qnorm2[t]);
  out.constant_bound_holds = out.constant_bound_slack >= -1e-9 * std::max(1.0, scale);
  out.holds = out.max_violation <= 0.0 && out.constant_bound_holds;
  return out;
}

}  // namespace

std::vector<double> uniform_times(double t_end, int steps) {
  if (steps < 1) throw std::invalid_argument("uniform_times: steps must be at least 1");
  std::vector<double> out;
  for (int k = 0; k <= steps; ++k) out.push_back(t_end * k / steps);
  return out;
}

Trajectory propagate(const SylvesterMatrix<Rational>& a, const ComplexVector& u0, double t_end, int steps,
                     double tol) {
  const std::size_t m = a.size();
  if (u0.size() != m) throw DegreeMismatchError("propagate: U0 must have deg p entries");
  Trajectory tr;
  tr.times = uniform_times(t_end, steps);
  tr.generator = a.a.cast<double>();
  const RootProfile<double> prof = real_roots(a.source, tol);

  if (prof.is_simple()) {
    tr.method = "eigen";
    const std::vector<double> lam = prof.flattened();
    const Matrix<double> r = vandermonde(std::span<const double>(lam));
    const Matrix<double> g = g_matrix(std::span<const double>(lam));
    // R^{−1} = diag(1/d) G with d_k = (GR)_kk.
    const Matrix<double> gr = g * r;
    ComplexVector coeff(m);
    for (std::size_t k = 0; k < m; ++k) {
      cd acc(0.0, 0.0);
      for (std::size_t i = 0; i < m; ++i) acc += g(k, i) * u0[i];
      coeff[k] = acc / gr(k, k);
    }
    for (double t : tr.times) {
      ComplexVector u(m, cd(0.0, 0.0));
      for (std::size_t k = 0; k < m; ++k) {
        const cd phase = coeff[k] * std::exp(cd(0.0, t * lam[k]));
        for (std::size_t i = 0; i < m; ++i) u[i] += r(i, k) * phase;
      }
      tr.states.push_back(std::move(u));
    }
  } else {
    tr.method = "expm";
    const Matrix<double> zero(m, m);
    for (double t : tr.times) tr.states.push_back(expm_apply(zero, t * tr.generator, u0));
  }
  return tr;
}

EnergySeries energy_series(const RationalPolynomial& p, const RationalPolynomial& q, const Trajectory& traj) {
  const Matrix<double> h = bezout_matrix(p, q).h.cast<double>();
  EnergySeries out;
  out.times = traj.times;
  for (const ComplexVector& u : traj.states) {
    if (u.size() != h.rows()) throw DegreeMismatchError("energy_series: trajectory dimension differs from deg p");
    const cd v = quadratic_form(h, u);
    out.values.push_back(v.real());
    out.max_imag = std::max(out.max_imag, std::fabs(v.imag()));
  }
  if (!out.values.empty()) {
    const auto [lo, hi] = std::minmax_element(out.values.begin(), out.values.end());
    out.relative_drift = (*hi - *lo) / std::max({std::fabs(*lo), std::fabs(*hi), 1e-300});
  }
  return out;
}

cd ExpSum::derivative(int order, double t) const {
  cd acc(0.0, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::pow(nu[k], order) * std::exp(cd(0.0, nu[k] * t));
  return acc;
}

cd ExpSum::apply(const FloatPolynomial& f, double t) const {
  cd acc(0.0, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * f(nu[k]) * std::exp(cd(0.0, nu[k] * t));
  return acc;
}

double derivative_identity_check(const RationalPolynomial& p, const RationalPolynomial& q, const ExpSum& u,
                                 const std::vector<double>& times) {
  const Matrix<double> h = bezout_matrix(p, q).h.cast<double>();
  const std::size_t m = h.rows();
  const FloatPolynomial pf = p.cast<double>();
  const FloatPolynomial qf = q.cast<double>();
  const auto bilinear = [&](double x, double y) {
    double acc = 0.0, xi = 1.0;
    for (std::size_t i = 0; i < m; ++i, xi *= x) {
      double yj = 1.0;
      for (std::size_t j = 0; j < m; ++j, yj *= y) acc += h(i, j) * xi * yj;
    }
    return acc;
  };
  double worst = 0.0;
  for (double t : times) {
    cd lhs(0.0, 0.0);
    for (std::size_t k = 0; k < u.c.size(); ++k)
      for (std::size_t l = 0; l < u.c.size(); ++l) {
        const double dnu = u.nu[k] - u.nu[l];
        lhs += cd(0.0, dnu) * u.c[k] * std::conj(u.c[l]) * bilinear(u.nu[k], u.nu[l]) * std::exp(cd(0.0, dnu * t));
      }
    const cd pu = u.apply(pf, t);
    const cd qu = u.apply(qf, t);
    const cd rhs = cd(0.0, 1.0) * (pu * std::conj(qu) - std::conj(pu) * qu);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

ChainBound chain_bound_check(const RationalPolynomial& p, int j, const Trajectory& traj) {
  const std::size_t m = traj.generator.rows();
  if (static_cast<int>(m) != p.degree()) throw DegreeMismatchError("chain_bound_check: trajectory dimension");
  return chain_bound_impl(p, j, traj.times, [&](std::size_t t) {
    std::vector<cd> w(traj.states[t].begin(), traj.states[t].end());
    // D_t^m u = (A U)_{m−1}.
    cd top(0.0, 0.0);
    for (std::size_t i = 0; i < m; ++i) top += traj.generator(m - 1, i) * traj.states[t][i];
    w.push_back(top);
    return w;
  });
}

ChainBound chain_bound_check(const RationalPolynomial& p, int j, const ExpSum& u, const std::vector<double>& times) {
  const int m = p.degree();
  return chain_bound_impl(p, j, times, [&](std::size_t t) {
    std::vector<cd> w;
    for (int k = 0; k <= m; ++k) w.push_back(u.derivative(k, times[t]));
    return w;
  });
}

InterpolationBound interpolation_bound(const RationalPolynomial& p, const RationalPolynomial& q,
                                       const RationalPolynomial& r, double tol) {
  if (!p.is_monic()) throw NonMonicError("interpolation_bound");
  const RootProfile<double> prof = real_roots(p, tol);
  if (!prof.is_simple()) throw MultipleRootError("interpolation_bound: p must be strictly hyperbolic");
  const std::vector<double> lam = prof.flattened();
  const FloatPolynomial pf = p.cast<double>();
  const std::vector<double> alpha = lagrange_weights(pf, q.cast<double>(), std::span<const double>(lam));
  const std::vector<double> beta = lagrange_weights(pf, r.cast<double>(), std::span<const double>(lam));
  InterpolationBound out;
  for (std::size_t k = 0; k < lam.size(); ++k) {
    if (!(alpha[k] > 0.0)) throw DivisionByZeroError("interpolation_bound: q does not separate p");
    out.c += beta[k] * beta[k] / alpha[k];
  }
  const std::size_t m = lam.size();
  Matrix<double> check = out.c * bezout_matrix(p, q).h.cast<double>();
  const std::vector<double> rv = r.cast<double>().ascending(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) check(i, k) -= rv[i] * rv[k];
  out.certificate = psd_check(check, tol);
  return out;
}

}  // namespace symm
