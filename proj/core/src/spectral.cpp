#include "symm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symm {

FactorizationBundle<double> factorization_bundle(const RationalPolynomial& p, const RationalPolynomial& q,
                                                 double tol) {
  const RootProfile<double> prof = real_roots(p, tol);
  if (!prof.is_simple())
    throw MultipleRootError("factorization_bundle: p must be strictly hyperbolic");
  const std::vector<double> roots = prof.flattened();
  FactorizationBundle<double> b =
      factorization_bundle(p.cast<double>(), q.cast<double>(), std::span<const double>(roots));
  b.h = bezout_matrix(p, q).h.cast<double>();
  b.residual = max_abs(Matrix<double>(b.gt_lambda_g - b.h));
  return b;
}

SeparationCertificate separates(const RationalPolynomial& p, const RationalPolynomial& q, double tol) {
  if (!p.is_monic()) throw NonMonicError("separates");
  const int m = p.degree();
  if (q.degree() != m - 1) throw DegreeMismatchError("separates: deg q must equal deg p - 1");

  const RootProfile<double> pr = real_roots(p, tol);
  SeparationCertificate cert;
  cert.leading_sign = sign_of(q.leading());

  const FloatPolynomial qf = q.cast<double>();
  const GeneralWeights<double> w = general_lagrange_weights(qf, pr);
  cert.alpha = w.alpha;
  cert.constant_c = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < w.alpha.size(); ++k)
    cert.constant_c = std::min(cert.constant_c, w.alpha[k] / pr.multiplicities()[k]);

  if (m == 1) {
    // q is a nonzero constant; s = 1 and there is nothing to interlace.
    cert.interlacing_witness.push_back({pr.distinct()[0], InterlacingEntry::Source::kP, 1});
  } else {
    RootProfile<double> qr;
    try {
      qr = real_roots(q, tol);
    } catch (const NonHyperbolicError& e) {
      throw NonHyperbolicQError(std::string("separates: q is not hyperbolic: ") + e.what());
    }
    for (std::size_t j = 0; j < pr.distinct_count(); ++j)
      cert.interlacing_witness.push_back({pr.distinct()[j], InterlacingEntry::Source::kP, pr.multiplicities()[j]});
    for (std::size_t j = 0; j < qr.distinct_count(); ++j)
      cert.interlacing_witness.push_back({qr.distinct()[j], InterlacingEntry::Source::kQ, qr.multiplicities()[j]});
    std::sort(cert.interlacing_witness.begin(), cert.interlacing_witness.end(),
              [](const InterlacingEntry& a, const InterlacingEntry& b) { return a.value < b.value; });

    const auto near = [tol](double a, double b) {
      return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
    };
    // (a) shared roots: λ_(j) must appear in q with multiplicity r_j − 1.
    std::vector<bool> used(qr.distinct_count(), false);
    for (std::size_t j = 0; j < pr.distinct_count() && !cert.failure_reason; ++j) {
      int found = 0;
      for (std::size_t k = 0; k < qr.distinct_count(); ++k)
        if (near(pr.distinct()[j], qr.distinct()[k])) {
          found += qr.multiplicities()[k];
          used[k] = true;
        }
      const int want = pr.multiplicities()[j] - 1;
      if (found != want) {
        if (want == 0) cert.boundary = true;
        cert.failure_reason = "root " + std::to_string(pr.distinct()[j]) + " of p appears in q with multiplicity " +
                              std::to_string(found) + ", expected " + std::to_string(want);
      }
    }
    // (b) the remaining roots μ_1 < … < μ_{s−1} strictly interlace.
    if (!cert.failure_reason) {
      std::vector<std::pair<double, int>> rest;
      for (std::size_t k = 0; k < qr.distinct_count(); ++k)
        if (!used[k]) rest.emplace_back(qr.distinct()[k], qr.multiplicities()[k]);
      const std::size_t s = pr.distinct_count();
      if (rest.size() != s - 1) {
        cert.failure_reason = "q has " + std::to_string(rest.size()) + " free roots, expected " + std::to_string(s - 1);
      } else {
        for (std::size_t k = 0; k < rest.size() && !cert.failure_reason; ++k) {
          const double mu = rest[k].first;
          const double lo = pr.distinct()[k];
          const double hi = pr.distinct()[k + 1];
          if (rest[k].second != 1) {
            cert.failure_reason = "free root " + std::to_string(mu) + " of q is not simple";
          } else if (!(lo < mu && mu < hi)) {
            cert.failure_reason = "free root " + std::to_string(mu) + " of q lies outside (" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + ")";
          } else if (near(mu, lo) || near(mu, hi)) {
            cert.boundary = true;
            cert.failure_reason = "free root " + std::to_string(mu) + " of q ties with a root of p (boundary)";
          }
        }
      }
    }
  }
  // (c) the lower bound needs a positive ζ^{m−1} coefficient.
  if (!cert.failure_reason && cert.leading_sign <= 0)
    cert.failure_reason = "leading coefficient of q is not positive";
  cert.separates = !cert.failure_reason.has_value();
  return cert;
}

PpPrimeBound hhat_pp_prime_bound(const RationalPolynomial& p, double tol) {
  if (!p.is_monic()) throw NonMonicError("hhat_pp_prime_bound");
  const RootProfile<double> pr = real_roots(p, tol);
  const RationalPolynomial dp = p.derivative();
  const GeneralWeights<double> w = general_lagrange_weights(dp.cast<double>(), pr);
  PpPrimeBound out;
  out.alpha = w.alpha;
  double sum = 0.0;
  for (std::size_t k = 0; k < w.alpha.size(); ++k) {
    const double r = pr.multiplicities()[k];
    sum += r * r / w.alpha[k];
  }
  out.c = 1.0 / sum;
  const std::size_t m = static_cast<std::size_t>(p.degree());
  Matrix<double> check = bezout_matrix(p, dp).h.cast<double>();
  const std::vector<double> v = dp.cast<double>().ascending(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) check(i, j) -= out.c * v[i] * v[j];
  out.certificate = psd_check(check, tol);
  return out;
}

}  // namespace symm
