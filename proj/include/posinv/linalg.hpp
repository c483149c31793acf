#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over Q or over a number field.
 *
 * The element type T is Rat or NFElem. A matrix carries a zero element so
 * that number-field matrices know their field even when empty.
 */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "posinv/errors.hpp"
#include "posinv/number_field.hpp"
#include "posinv/rational.hpp"

namespace posinv {

inline bool is_zero(const Rat& q) { return q == 0; }
inline bool is_zero(const NFElem& a) { return a.is_zero(); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline NFElem one_like(const NFElem& a) { return a.field()->one(); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline NFElem zero_like(const NFElem& a) { return a.field()->zero(); }

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const T& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  T zero_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix dimension mismatch");
  Matrix<T> c(a.rows(), b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero(b(k, j))) continue;
        c(i, j) += T(a(i, k) * b(k, j));
      }
    }
  return c;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("matrix dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    T inv = one_like(m.zero()) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = T(m(row, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(i, j) -= T(f * m(row, j));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> kernel(Matrix<T> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), m.zero());
    v[free] = one_like(m.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b, or nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.rows()) throw StructuralError("right-hand side has the wrong length");
  Matrix<T> aug(a.rows(), a.cols() + 1, a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), a.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw StructuralError("determinant of a non-square matrix");
  T det = one_like(m.zero());
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return m.zero();
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det = T(det * m(c, c));
    T inv = one_like(m.zero()) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      T f = T(m(i, c) * inv);
      for (std::size_t j = c; j < n; ++j) {
        if (!is_zero(m(c, j))) m(i, j) -= T(f * m(c, j));
      }
    }
  }
  return det;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw StructuralError("inverse of a non-square matrix");
  Matrix<T> aug(n, 2 * n, m.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one_like(m.zero());
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n, m.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Characteristic polynomial det(X I - m), constant term first, by reduction
/// to Hessenberg form followed by the standard three-term recurrence.
template <class T>
std::vector<T> charpoly(Matrix<T> h) {
  const std::size_t n = h.rows();
  if (n != h.cols()) throw StructuralError("characteristic polynomial of a non-square matrix");
  const T zero = h.zero();
  const T one = one_like(zero);
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      h.swap_rows(i, m);
      h.swap_cols(i, m);
    }
    T t_inv = one / h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (is_zero(h(r, m - 1))) continue;
      T u = T(h(r, m - 1) * t_inv);
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(h(m, j))) h(r, j) -= T(u * h(m, j));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_zero(h(j, r))) h(j, m) += T(u * h(j, r));
      }
    }
  }
  // p[k] is the characteristic polynomial of the leading k x k block.
  std::vector<std::vector<T>> p(n + 1);
  p[0] = {one};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<T> cur(m + 1, zero);
    const auto& prev = p[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      cur[k + 1] += prev[k];
      cur[k] -= T(h(m - 1, m - 1) * prev[k]);
    }
    T t = one;
    for (std::size_t i = 1; i < m; ++i) {
      t = T(t * h(m - i, m - i - 1));
      T coef = T(t * h(m - i - 1, m - 1));
      if (is_zero(coef)) continue;
      const auto& q = p[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] -= T(coef * q[k]);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

}  // namespace posinv
