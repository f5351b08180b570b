#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symm/errors.hpp"
#include "symm/scalar.hpp"

namespace symm {

/// Degree reported for the zero polynomial (stands in for −∞).
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial with real coefficients.
///
/// Coefficients are stored degree-descending, leading coefficient first:
/// `{1, 0, -1}` is ζ² − 1. The leading coefficient is never zero; the zero
/// polynomial has no coefficients and degree kZeroDegree. Values are
/// immutable after construction.
///
/// Index convention used project-wide for quadratic forms: an m×m matrix
/// H = (h_ij) stands for Σ h_ij ζ^i η^j with 0 ≤ i, j ≤ m−1, i.e. rows and
/// columns run over *ascending* powers. Use `ascending()` when moving
/// between a polynomial and a row of such a matrix.
template <Scalar T>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<T> descending) : c_(std::move(descending)) { trim(); }
  Polynomial(std::initializer_list<T> descending) : c_(descending) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

  /// Builds from ascending-power coefficients c_0, c_1, ….
  static Polynomial from_ascending(std::vector<T> asc) {
    std::reverse(asc.begin(), asc.end());
    return Polynomial(std::move(asc));
  }

  int degree() const noexcept {
    return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  /// Coefficient of ζ^power; zero outside the stored range.
  T coeff(int power) const {
    if (power < 0 || c_.empty() || power > degree()) return T(0);
    return c_[static_cast<std::size_t>(degree() - power)];
  }

  /// Coefficients c_0 … c_{len−1} of ascending powers, zero-padded to `len`
  /// (defaults to degree + 1).
  std::vector<T> ascending(std::size_t len = 0) const {
    if (len == 0) len = c_.size();
    std::vector<T> out(len, T(0));
    for (std::size_t i = 0; i < c_.size() && i < len; ++i) out[i] = c_[c_.size() - 1 - i];
    if (len < c_.size())
      for (std::size_t i = len; i < c_.size(); ++i)
        if (!symm::is_zero(c_[c_.size() - 1 - i]))
          throw std::invalid_argument("ascending: degree exceeds requested length");
    return out;
  }

  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading: zero polynomial");
    return c_.front();
  }
  bool is_monic() const { return !c_.empty() && c_.front() == T(1); }

  /// Horner evaluation.
  T operator()(const T& x) const {
    T acc(0);
    for (const T& a : c_) acc = acc * x + a;
    return acc;
  }

  Polynomial derivative(int order = 1) const {
    if (order < 0) throw std::invalid_argument("derivative: negative order");
    if (order == 0) return *this;
    const int d = degree();
    if (d < order) return {};
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(d - order + 1));
    for (int k = d; k >= order; --k) {
      // ζ^k ↦ k!/(k−order)! ζ^{k−order}
      T f(1);
      for (int t = 0; t < order; ++t) f *= T(k - t);
      out.push_back(f * coeff(k));
    }
    return Polynomial(std::move(out));
  }

  /// Same polynomial divided by its leading coefficient.
  Polynomial monic() const {
    if (c_.empty()) throw std::domain_error("monic: zero polynomial");
    std::vector<T> out(c_);
    const T lead = c_.front();
    for (T& a : out) a /= lead;
    return Polynomial(std::move(out));
  }

  template <Scalar U>
  Polynomial<U> cast() const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const T& a : c_) {
      if constexpr (std::same_as<U, T>) {
        out.push_back(a);
      } else if constexpr (std::same_as<U, double>) {
        out.push_back(to_double(a));
      } else {
        out.push_back(to_rational(a));
      }
    }
    return Polynomial<U>(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<T> asc(n, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) asc[i] += a.c_[a.c_.size() - 1 - i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) asc[i] += b.c_[b.c_.size() - 1 - i];
    return from_ascending(std::move(asc));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> out(a.c_);
    for (T& v : out) v = -v;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> out(a.c_);
    for (T& v : out) v *= s;
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    auto first = std::find_if(c_.begin(), c_.end(), [](const T& v) { return !symm::is_zero(v); });
    c_.erase(c_.begin(), first);
  }

  std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;
using FloatPolynomial = Polynomial<double>;

template <Scalar T>
Polynomial<T> derivative(const Polynomial<T>& p, int order = 1) {
  return p.derivative(order);
}

template <Scalar T>
T eval(const Polynomial<T>& p, const T& x) {
  return p(x);
}

/// Euclidean division: a = quotient·b + remainder, deg remainder < deg b.
template <Scalar T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw DivisionByZeroError("divmod: division by the zero polynomial");
  std::vector<T> rem = a.ascending();
  const std::vector<T> den = b.ascending();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial<T>{}, a};
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1), T(0));
  for (int k = a.degree(); k >= db; --k) {
    T f = rem[static_cast<std::size_t>(k)] / den[static_cast<std::size_t>(db)];
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= f * den[static_cast<std::size_t>(j)];
    rem[static_cast<std::size_t>(k)] = T(0);
  }
  return {Polynomial<T>::from_ascending(std::move(quo)),
          Polynomial<T>::from_ascending(std::move(rem))};
}

/// Monic greatest common divisor (exact backend only).
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Monic polynomial Π (ζ − λ_k) over a flattened root list.
template <Scalar T>
Polynomial<T> from_roots(std::span<const T> roots) {
  std::vector<T> asc{T(1)};
  for (const T& r : roots) {
    std::vector<T> next(asc.size() + 1, T(0));
    for (std::size_t i = 0; i < asc.size(); ++i) {
      next[i + 1] += asc[i];
      next[i] -= r * asc[i];
    }
    asc = std::move(next);
  }
  return Polynomial<T>::from_ascending(std::move(asc));
}

template <Scalar T>
Polynomial<T> from_roots(const std::vector<T>& roots) {
  return from_roots(std::span<const T>(roots));
}

/// σ_{ℓ,k}: elementary symmetric polynomial of degree ℓ in the roots with
/// the root at (0-based) position `exclude` removed; σ_{0,k} = 1.
template <Scalar T>
T elementary_symmetric_excluding(std::span<const T> roots, std::size_t exclude, int degree) {
  const int m = static_cast<int>(roots.size());
  if (exclude >= roots.size()) throw std::out_of_range("elementary_symmetric_excluding: index");
  if (degree < 0 || degree > m - 1)
    throw std::out_of_range("elementary_symmetric_excluding: degree must lie in [0, m-1]");
  // e[j] accumulates e_j over the roots seen so far.
  std::vector<T> e(static_cast<std::size_t>(degree) + 1, T(0));
  e[0] = T(1);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (k == exclude) continue;
    for (int j = degree; j >= 1; --j)
      e[static_cast<std::size_t>(j)] += roots[k] * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(degree)];
}

/// Power sums P_0 … P_upto of the roots of a monic polynomial, from its
/// coefficients via Newton's identities (no roots are computed).
template <Scalar T>
std::vector<T> power_sums(const Polynomial<T>& p, int upto) {
  if (!p.is_monic()) throw NonMonicError("power_sums");
  if (upto < 0) throw std::invalid_argument("power_sums: negative bound");
  const int m = p.degree();
  // a[j] is the coefficient of ζ^{m−j}; a[0] = 1.
  const std::vector<T>& a = p.coeffs();
  std::vector<T> ps(static_cast<std::size_t>(upto) + 1, T(0));
  ps[0] = T(m);
  for (int t = 1; t <= upto; ++t) {
    T acc(0);
    const int top = std::min(t - 1, m);
    for (int j = 1; j <= top; ++j)
      acc -= a[static_cast<std::size_t>(j)] * ps[static_cast<std::size_t>(t - j)];
    if (t <= m) acc -= T(t) * a[static_cast<std::size_t>(t)];
    ps[static_cast<std::size_t>(t)] = acc;
  }
  return ps;
}

}  // namespace symm
