#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symm/errors.hpp"
#include "symm/scalar.hpp"

namespace symm {

/// Dense row-major matrix over either scalar backend.
///
/// Deliberately small: the matrices in this library are at most a few
/// dozen rows, and the exact backend rules out BLAS-style kernels anyway.
template <Scalar T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(std::span<const T> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <Scalar U>
  Matrix<U> cast() const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if constexpr (std::same_as<U, T>) {
          out(i, j) = (*this)(i, j);
        } else if constexpr (std::same_as<U, double>) {
          out(i, j) = to_double((*this)(i, j));
        } else {
          out(i, j) = to_rational((*this)(i, j));
        }
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
    return c;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("Matrix: vector size mismatch");
    std::vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Largest absolute entry, as a double.
template <Scalar T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, abs_value(to_double(a(i, j))));
  return m;
}

/// Max-norm of a − aᵀ, kept in the matrix's own scalar type.
template <Scalar T>
T asymmetry(const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("asymmetry: matrix not square");
  T worst(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      T d = abs_value(T(a(i, j) - a(j, i)));
      if (d > worst) worst = d;
    }
  return worst;
}

/// Determinant by Gaussian elimination. Exact for rationals; partial
/// pivoting for doubles.
template <Scalar T>
T determinant(Matrix<T> a) {
  if (!a.is_square()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    if constexpr (kIsExact<T>) {
      while (piv < n && is_zero(a(piv, k))) ++piv;
    } else {
      for (std::size_t i = k + 1; i < n; ++i)
        if (abs_value(a(i, k)) > abs_value(a(piv, k))) piv = i;
      if (is_zero(a(piv, k))) piv = n;
    }
    if (piv == n) return T(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      T f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

/// Gauss-Jordan inverse. Throws DivisionByZeroError when singular.
template <Scalar T>
Matrix<T> inverse(Matrix<T> a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs_value(a(i, k)) > abs_value(a(piv, k))) piv = i;
    if (is_zero(a(piv, k))) throw DivisionByZeroError("inverse: singular matrix");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    T d = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || is_zero(a(i, k))) continue;
      T f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

/// Adjugate (transpose of the cofactor matrix). Total: defined for
/// singular input, and polynomial in the entries.
template <Scalar T>
Matrix<T> adjugate(const Matrix<T>& a) {
  if (!a.is_square()) throw std::invalid_argument("adjugate: matrix not square");
  const std::size_t n = a.rows();
  if (n == 1) return Matrix<T>{{T(1)}};
  Matrix<T> adj(n, n);
  Matrix<T> minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = a(r, c);
        }
        ++mr;
      }
      T cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;
    }
  return adj;
}

}  // namespace symm
