#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "symm/matrix.hpp"
#include "symm/polynomial.hpp"

namespace symm::testing {

/// Degree-descending integer coefficients.
inline RationalPolynomial rp(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long x : coeffs) c.emplace_back(x);
  return RationalPolynomial(c);
}

inline Matrix<Rational> rm(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Rational> m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}

inline std::vector<Rational> rv(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace symm::testing

namespace symm {

// gtest picks these up through ADL when printing failed comparisons.
template <Scalar T>
void PrintTo(const Matrix<T>& m, std::ostream* os) {
  *os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    *os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) *os << (j ? " " : "") << m(i, j);
  }
  *os << "]";
}

template <Scalar T>
void PrintTo(const Polynomial<T>& p, std::ostream* os) {
  *os << "poly[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) *os << (i ? " " : "") << p.coeffs()[i];
  *os << "]";
}

}  // namespace symm
