#pragma once

#include <cstddef>
#include <vector>

#include "qpoly/errors.hpp"

namespace qpoly::exact {

/// Dense row-major matrix over any ring-like type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

/// Coefficients of det(xI - A), constant term first, by Berkowitz's
/// division-free algorithm.
template <class T>
std::vector<T> berkowitz_charpoly(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DomainError("characteristic polynomial of a non-square matrix");
  // Highest degree first while building.
  std::vector<T> v{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column t = (1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C).
    std::vector<T> t;
    t.reserve(r + 2);
    t.push_back(T(1));
    t.push_back(-a(r, r));
    std::vector<T> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      T acc(0);
      for (std::size_t j = 0; j < r; ++j) acc += a(r, j) * col[j];
      t.push_back(-acc);
      if (k + 1 == r) break;
      std::vector<T> next(r, T(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * col[j];
      col = std::move(next);
    }
    std::vector<T> w(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i] += t[i - j] * v[j];
    v = std::move(w);
  }
  return std::vector<T>(v.rbegin(), v.rend());
}

}  // namespace qpoly::exact
