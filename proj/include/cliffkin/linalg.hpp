#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cliffkin/errors.hpp"
#include "cliffkin/rational.hpp"

namespace cliffkin {

/// Dense row-major matrix over a commutative ring T (Rational or Polynomial).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw Error("matrix/vector dimension mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Reduced row echelon form with its pivot columns.
struct RowEchelon {
  Matrix<Rational> reduced;
  std::vector<std::size_t> pivots;
  [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Exact Gauss-Jordan elimination.
inline RowEchelon rref(Matrix<Rational> m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline Matrix<Rational> inverse(const Matrix<Rational>& a) {
  if (a.rows() != a.cols()) throw NotInvertible("non-square matrix");
  const std::size_t n = a.rows();
  Matrix<Rational> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw NotInvertible("singular matrix");
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Counts of positive, negative and zero entries in a congruence-diagonal form (Sylvester).
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  [[nodiscard]] std::size_t rank() const { return positive + negative; }
  /// Index in the sense of the smaller of the two sign counts.
  [[nodiscard]] std::size_t index() const { return positive < negative ? positive : negative; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric rational matrix by exact congruence diagonalization.
inline Inertia inertia(Matrix<Rational> s) {
  if (s.rows() != s.cols()) throw Error("inertia of non-square matrix");
  const std::size_t n = s.rows();
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(s(k, k))) {
      std::size_t j = k + 1;
      while (j < n && is_zero(s(j, j))) ++j;
      if (j < n) {
        for (std::size_t c = 0; c < n; ++c) std::swap(s(k, c), s(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(s(r, k), s(r, j));
      } else {
        j = k + 1;
        while (j < n && is_zero(s(k, j))) ++j;
        if (j == n) {
          ++out.zero;
          continue;
        }
        // Row/column k += row/column j makes the diagonal 2 s(k,j) nonzero.
        for (std::size_t c = 0; c < n; ++c) s(k, c) += s(j, c);
        for (std::size_t r = 0; r < n; ++r) s(r, k) += s(r, j);
      }
    }
    const Rational pivot = s(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(s(i, k))) continue;
      Rational f = s(i, k) / pivot;
      for (std::size_t c = k; c < n; ++c) s(i, c) -= f * s(k, c);
      for (std::size_t r = k; r < n; ++r) s(r, i) -= f * s(r, k);
    }
    if (sgn(pivot) > 0)
      ++out.positive;
    else
      ++out.negative;
  }
  return out;
}

}  // namespace cliffkin
