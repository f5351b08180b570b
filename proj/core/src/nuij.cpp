#include "symm/nuij.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "symm/errors.hpp"

namespace symm {

std::vector<Rational> nuij_inverse_coeffs(int m) {
  if (m < 1) throw std::invalid_argument("nuij_inverse_coeffs: m must be at least 1");
  // Coefficients of (1 + x)^{−n}, n = m − 1: c_ℓ = c_{ℓ−1} · (−(n + ℓ − 1)/ℓ).
  std::vector<Rational> c;
  Rational cur(1);
  const int n = m - 1;
  for (int ell = 1; ell <= m; ++ell) {
    cur = cur * Rational(-(n + ell - 1)) / Rational(ell);
    c.push_back(cur);
  }
  return c;
}

RationalPolynomial nuij_invert(const RationalPolynomial& p_eps, const Rational& epsilon, int m) {
  const std::vector<Rational> c = nuij_inverse_coeffs(m);
  RationalPolynomial out = p_eps;
  RationalPolynomial d = p_eps;
  Rational power(1);
  for (int ell = 1; ell <= m; ++ell) {
    d = d.derivative();
    power *= epsilon;
    if (d.is_zero()) break;
    out = out + Rational(c[static_cast<std::size_t>(ell - 1)] * power) * d;
  }
  return out;
}

GapConstantTable gap_constants(int m) {
  if (m < 2) throw std::invalid_argument("gap_constants: m must be at least 2");
  GapConstantTable t;
  t.m = m;
  t.c.assign(static_cast<std::size_t>(m) + 1, 0.0);
  t.c[2] = 1.0;
  for (int ell = 2; ell < m; ++ell) {
    const double cl = t.c[static_cast<std::size_t>(ell)];
    double best = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= ell; ++k) {
      const double b = k + cl;
      // Smaller root of x² − b x + c_ℓ, written to avoid cancellation.
      const double v = 2.0 * cl / (b + std::sqrt(b * b - 4.0 * cl));
      best = std::min(best, v);
    }
    t.c[static_cast<std::size_t>(ell) + 1] = best;
  }
  return t;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kMarginal: return "marginal";
    case Verdict::kFail: return "fail";
  }
  return "fail";
}

NuijFamilyPoint nuij_family_point(const RationalPolynomial& p, double epsilon, double tol) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("nuij_family_point: epsilon must be positive");
  NuijFamilyPoint pt;
  pt.epsilon = epsilon;
  pt.p_eps = nuij_transform(p, to_rational(epsilon));
  pt.roots_eps = real_roots(pt.p_eps, tol);
  pt.q_eps = p - pt.p_eps;
  return pt;
}

namespace {

double min_consecutive_gap(const std::vector<double>& roots) {
  double g = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < roots.size(); ++k) g = std::min(g, roots[k] - roots[k - 1]);
  return g;
}

Verdict grade(double observed, double required, double margin) {
  if (observed >= required) return Verdict::kPass;
  if (observed >= required - margin) return Verdict::kMarginal;
  return Verdict::kFail;
}

}  // namespace

GapCheck verify_gaps(const RationalPolynomial& p, double epsilon, double tol) {
  if (!p.is_monic()) throw NonMonicError("verify_gaps");
  const int m = p.degree();
  GapCheck out;
  out.epsilon = epsilon;
  out.c_m = m >= 2 ? gap_constants(m).last() : 0.0;
  out.margin = std::max(1e-12, 1e-6 * epsilon);
  out.roots = nuij_family_point(p, epsilon, tol).roots_eps;
  if (m < 2) {
    out.min_gap = std::numeric_limits<double>::infinity();
    out.verdict = Verdict::kPass;
    return out;
  }
  // A merged root means a gap below the resolution of real_roots.
  out.min_gap = out.roots.is_simple() ? min_consecutive_gap(out.roots.distinct()) : 0.0;
  out.verdict = grade(out.min_gap, out.c_m * epsilon, out.margin);
  return out;
}

std::vector<StageGap> verify_stage_gaps(const RationalPolynomial& p, double epsilon, double tol) {
  const int m = p.degree();
  std::vector<StageGap> out;
  if (m < 2) return out;
  const GapConstantTable table = gap_constants(m);
  const double margin = std::max(1e-12, 1e-6 * epsilon);
  const Rational eps = to_rational(epsilon);
  RationalPolynomial stage = p;
  for (int ell = 2; ell <= m; ++ell) {
    stage = nuij_transform(stage, eps, 1);
    const RootProfile<double> roots = real_roots(stage, tol);
    StageGap g;
    g.stage = ell;
    g.c = table.at(ell);
    const double gap = min_consecutive_gap(roots.distinct());
    g.min_gap_over_eps = gap / epsilon;
    g.verdict = roots.distinct_count() < 2 ? Verdict::kPass : grade(gap, g.c * epsilon, margin);
    out.push_back(g);
  }
  return out;
}

std::vector<RootProfile<double>> stage_roots(const RationalPolynomial& p, double epsilon, double tol) {
  std::vector<RootProfile<double>> out;
  const Rational eps = to_rational(epsilon);
  RationalPolynomial stage = p;
  out.push_back(real_roots(stage, tol));
  for (int k = 1; k < p.degree(); ++k) {
    stage = nuij_transform(stage, eps, 1);
    out.push_back(real_roots(stage, tol));
  }
  return out;
}

bool interlaces(const RootProfile<double>& upper, const RootProfile<double>& lower, bool strict) {
  const std::vector<double> lam = upper.flattened();
  const std::vector<double> mu = lower.flattened();
  if (lam.size() != mu.size() + 1) return false;
  const auto ok = [strict](double a, double b) { return strict ? a < b : a <= b; };
  for (std::size_t k = 0; k < mu.size(); ++k)
    if (!ok(lam[k], mu[k]) || !ok(mu[k], lam[k + 1])) return false;
  return true;
}

bool interlaces_stagewise(const RootProfile<double>& prev, const RootProfile<double>& next, double tol) {
  const std::vector<double> a = prev.flattened();
  const std::vector<double> b = next.flattened();
  if (a.size() != b.size()) return false;
  const auto le = [tol](double x, double y) { return x <= y + tol * std::max({1.0, std::fabs(x), std::fabs(y)}); };
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!le(b[k], a[k])) return false;
    if (k + 1 < a.size() && !le(a[k], b[k + 1])) return false;
  }
  return true;
}

std::vector<double> epsilon_grid(double hi, double lo, int n, bool logarithmic) {
  if (n < 1 || !(hi > 0.0) || !(lo > 0.0)) throw std::invalid_argument("epsilon_grid: need n >= 1 and positive bounds");
  std::vector<double> out;
  if (n == 1) return {hi};
  for (int k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / (n - 1);
    out.push_back(logarithmic ? std::pow(10.0, std::log10(hi) + t * (std::log10(lo) - std::log10(hi)))
                              : hi + t * (lo - hi));
  }
  out.front() = hi;
  out.back() = lo;
  return out;
}

std::vector<double> default_epsilon_grid() { return epsilon_grid(1.0, 1e-4, 9, true); }

std::vector<double> parse_epsilon_grid(const std::string& spec) {
  std::string body = spec;
  bool logarithmic = true;
  if (const auto paren = body.find('('); paren != std::string::npos) {
    const std::string mode = body.substr(paren);
    if (mode == "(log)") {
      logarithmic = true;
    } else if (mode == "(lin)") {
      logarithmic = false;
    } else {
      throw ParseError("eps-grid: unknown spacing " + mode);
    }
    body = body.substr(0, paren);
  }
  const auto a = body.find(':');
  const auto b = body.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) throw ParseError("eps-grid: expected hi:lo:n");
  try {
    std::size_t used = 0;
    const double hi = std::stod(body.substr(0, a));
    const double lo = std::stod(body.substr(a + 1, b - a - 1));
    const int n = std::stoi(body.substr(b + 1), &used);
    if (used != body.size() - b - 1) throw ParseError("eps-grid: trailing characters");
    return epsilon_grid(hi, lo, n, logarithmic);
  } catch (const std::logic_error&) {
    throw ParseError("eps-grid: malformed " + spec);
  }
}

}  // namespace symm
