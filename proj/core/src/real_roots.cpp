#include "symm/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include "symm/bezout.hpp"
#include "symm/linalg.hpp"

namespace symm {
namespace {

RationalPolynomial exact_quotient(const RationalPolynomial& a, const RationalPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NonzeroRemainderError("squarefree_factors: inexact division");
  return q;
}

int sign_at(const RationalPolynomial& p, const Rational& x) { return sign_of(p(x)); }

int variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& f : chain) s.push_back(sign_at(f, x));
  return variations(s);
}

int variations_at_infinity(const std::vector<RationalPolynomial>& chain, bool negative) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& f : chain) {
    int sg = sign_of(f.leading());
    if (negative && f.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

/// Parlett–Reinsch balancing (radix 2) in place.
void balance(Matrix<double>& a) {
  constexpr double kRadix = 2.0;
  constexpr double kSqrdx = kRadix * kRadix;
  const std::size_t n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) {
          c += std::fabs(a(j, i));
          r += std::fabs(a(i, j));
        }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / kRadix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= kRadix;
        c *= kSqrdx;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kSqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

std::vector<std::complex<double>> companion_eigenvalues(const RationalPolynomial& f) {
  const RationalPolynomial monic = f.monic();
  Matrix<double> a = sylvester_matrix(monic.cast<double>()).a;
  balance(a);
  return eigenvalues(a);
}

double cauchy_bound(const RationalPolynomial& f) {
  const Rational lead = f.leading();
  Rational worst(0);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    Rational r = abs_value(Rational(f.coeffs()[i] / lead));
    if (r > worst) worst = r;
  }
  return 2.0 * (1.0 + to_double(worst)) + 1.0;
}

/// Shrinks a sign-changing bracket [lo, hi] of a simple root with a
/// Newton/bisection hybrid. Signs are exact; Newton steps use rounded values.
double refine_root(const RationalPolynomial& f, const RationalPolynomial& df, double lo, double hi,
                   int sign_lo) {
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    const Rational xr(x);
    const Rational fx = f(xr);
    const int s = sign_of(fx);
    if (s == 0) return x;
    if (s == sign_lo) {
      lo = x;
    } else {
      hi = x;
    }
    if (std::nextafter(lo, hi) >= hi) break;
    const double dfx = to_double(df(xr));
    double next = dfx != 0.0 ? x - to_double(fx) / dfx : std::numeric_limits<double>::quiet_NaN();
    // Fall back to bisection when Newton leaves the bracket or stalls.
    const double width = hi - lo;
    if (!(next > lo && next < hi) || std::fabs(next - x) > 0.5 * width) next = 0.5 * (lo + hi);
    if (next == x) next = 0.5 * (lo + hi);
    if (next == lo || next == hi) break;
    x = next;
  }
  return abs_value(f(Rational(lo))) <= abs_value(f(Rational(hi))) ? lo : hi;
}

/// Isolation by exact bisection on Sturm counts, for when eigenvalue
/// estimates fail to separate the roots of a square-free factor.
std::vector<double> isolate_and_refine(const RationalPolynomial& f, double bound) {
  const auto chain = sturm_sequence(f);
  const RationalPolynomial df = f.derivative();
  std::vector<std::pair<Rational, Rational>> stack{{Rational(-bound), Rational(bound)}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int n = variations_at(chain, lo) - variations_at(chain, hi);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::vector<double> roots;
  for (auto [lo, hi] : isolated) {
    // (lo, hi] holds one simple root; tighten exactly until double endpoints
    // bracket it.
    if (is_zero(f(hi))) {
      roots.push_back(to_double(hi));
      continue;
    }
    for (int k = 0; k < 200; ++k) {
      const double dlo = std::nextafter(to_double(lo), -INFINITY);
      const double dhi = std::nextafter(to_double(hi), INFINITY);
      const int slo = sign_at(f, Rational(dlo));
      const int shi = sign_at(f, Rational(dhi));
      if (slo != 0 && shi != 0 && slo != shi && variations_at(chain, Rational(dlo)) - variations_at(chain, Rational(dhi)) == 1) {
        roots.push_back(refine_root(f, df, dlo, dhi, slo));
        break;
      }
      Rational mid = (lo + hi) / 2;
      if (is_zero(f(mid))) {
        roots.push_back(to_double(mid));
        break;
      }
      if (sign_at(f, mid) == sign_at(f, hi)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Real roots of a square-free factor whose roots are all real.
std::vector<double> simple_real_roots(const RationalPolynomial& f,
                                      const std::vector<std::complex<double>>& eig) {
  const int n = f.degree();
  const double bound = cauchy_bound(f);
  std::vector<double> approx;
  approx.reserve(eig.size());
  for (const auto& z : eig) approx.push_back(std::clamp(z.real(), -bound, bound));
  std::sort(approx.begin(), approx.end());

  std::vector<double> edges{-bound};
  for (int k = 0; k + 1 < n; ++k) edges.push_back(0.5 * (approx[k] + approx[k + 1]));
  edges.push_back(bound);

  std::vector<int> signs;
  bool ok = true;
  for (std::size_t k = 0; k < edges.size() && ok; ++k) {
    signs.push_back(sign_at(f, Rational(edges[k])));
    if (signs.back() == 0) ok = false;
    if (k > 0 && (!(edges[k - 1] < edges[k]) || (ok && signs[k] == signs[k - 1]))) ok = false;
  }
  if (!ok) return isolate_and_refine(f, bound);

  const RationalPolynomial df = f.derivative();
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) roots.push_back(refine_root(f, df, edges[k], edges[k + 1], signs[k]));
  return roots;
}

}  // namespace

std::vector<RationalPolynomial> sturm_sequence(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p};
  if (p.degree() < 1) return chain;
  chain.push_back(p.derivative());
  while (true) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    auto [q, r] = divmod(a, b);
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

int count_distinct_real_roots(const RationalPolynomial& p) {
  if (p.degree() < 1) return 0;
  const auto chain = sturm_sequence(p);
  return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

int count_distinct_real_roots(const RationalPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) return 0;
  const auto chain = sturm_sequence(p);
  return variations_at(chain, lo) - variations_at(chain, hi);
}

std::vector<RationalPolynomial> squarefree_factors(const RationalPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("squarefree_factors: degree must be at least 1");
  const RationalPolynomial f = p.monic();
  const RationalPolynomial df = f.derivative();
  const RationalPolynomial a0 = gcd(f, df);
  RationalPolynomial b = exact_quotient(f, a0);
  RationalPolynomial c = exact_quotient(df, a0);
  RationalPolynomial d = c - b.derivative();
  std::vector<RationalPolynomial> out;
  while (b.degree() >= 1) {
    RationalPolynomial a = gcd(b, d);
    out.push_back(a);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

RootProfile<double> real_roots(const RationalPolynomial& p, double tol) {
  if (p.degree() < 1) throw std::invalid_argument("real_roots: degree must be at least 1");
  const auto factors = squarefree_factors(p);
  std::vector<std::pair<double, int>> found;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const RationalPolynomial& f = factors[k];
    if (f.degree() < 1) continue;
    const int mult = static_cast<int>(k) + 1;
    const auto eig = companion_eigenvalues(f);
    std::vector<double> roots;
    if (count_distinct_real_roots(f) == f.degree()) {
      roots = simple_real_roots(f, eig);
    } else {
      double scale = 1.0, worst_im = 0.0;
      for (const auto& z : eig) {
        scale = std::max(scale, std::abs(z));
        worst_im = std::max(worst_im, std::fabs(z.imag()));
      }
      if (worst_im > tol * scale)
        throw NonHyperbolicError("complex roots: eigenvalue imaginary part " + std::to_string(worst_im));
      for (const auto& z : eig) roots.push_back(z.real());
    }
    for (double r : roots) found.emplace_back(r, mult);
  }
  std::sort(found.begin(), found.end());

  std::vector<double> distinct;
  std::vector<int> mult;
  for (const auto& [x, r] : found) {
    if (!distinct.empty() && std::fabs(x - distinct.back()) < tol * std::max(1.0, std::fabs(x))) {
      const int total = mult.back() + r;
      distinct.back() = (distinct.back() * mult.back() + x * r) / total;
      mult.back() = total;
    } else {
      distinct.push_back(x);
      mult.push_back(r);
    }
  }
  return RootProfile<double>(std::move(distinct), std::move(mult));
}

RootProfile<double> real_roots(const FloatPolynomial& p, double tol) {
  return real_roots(p.cast<Rational>(), tol);
}

HyperbolicityVerdict is_hyperbolic(const RationalPolynomial& p) {
  HyperbolicityVerdict v;
  if (p.degree() < 1) {
    v.failure_reason = "degree < 1";
    return v;
  }
  const RationalPolynomial g = gcd(p, p.derivative());
  const int distinct = p.degree() - g.degree();
  v.sturm_verdict = count_distinct_real_roots(p) == distinct;
  v.hermite_verdict = psd_check(bezout_matrix(p.monic(), p.monic().derivative()).h).is_psd;
  if (v.sturm_verdict != v.hermite_verdict)
    throw Error("is_hyperbolic: Sturm and Hermite criteria disagree (arithmetic fault)");
  v.method = HyperbolicityMethod::kSturm;
  v.is_hyperbolic = v.sturm_verdict;
  v.is_strict = v.is_hyperbolic && g.degree() == 0;
  if (v.is_hyperbolic) {
    v.witness = real_roots(p);
  } else {
    v.failure_reason = "complex roots";
  }
  return v;
}

HyperbolicityVerdict is_hyperbolic(const FloatPolynomial& p) { return is_hyperbolic(p.cast<Rational>()); }

}  // namespace symm
