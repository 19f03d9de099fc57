#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nakayama/error.hpp"

namespace nakayama {

/// Dense row-major matrix over an exact element type (Rational, LaurentPoly
/// or RatFunc). Indices are 0-based.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<E> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
      throw DimensionMismatch("expected " + std::to_string(rows_ * cols_) + " entries, got " +
                              std::to_string(entries_.size()));
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = E::one();
    return m;
  }

  /// Builds from nested rows; all rows must have the same length.
  static Matrix from_rows(const std::vector<std::vector<E>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    std::vector<E> flat;
    flat.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionMismatch("ragged rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(flat));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  E& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<E>& entries() const { return entries_; }

  std::vector<E> row(std::size_t r) const {
    return std::vector<E>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  std::vector<E> col(std::size_t c) const {
    std::vector<E> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  /// Copy with the listed row and column indices removed.
  Matrix without(const std::vector<std::size_t>& drop_rows, const std::vector<std::size_t>& drop_cols) const {
    std::vector<std::size_t> keep_r, keep_c;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (std::find(drop_rows.begin(), drop_rows.end(), r) == drop_rows.end()) keep_r.push_back(r);
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      if (std::find(drop_cols.begin(), drop_cols.end(), c) == drop_cols.end()) keep_c.push_back(c);
    }
    Matrix out(keep_r.size(), keep_c.size());
    for (std::size_t i = 0; i < keep_r.size(); ++i) {
      for (std::size_t j = 0; j < keep_c.size(); ++j) out(i, j) = (*this)(keep_r[i], keep_c[j]);
    }
    return out;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const E&>()))> {
    using R = decltype(f(std::declval<const E&>()));
    std::vector<R> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(f(e));
    return Matrix<R>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> entries_;
};

template <class E>
Matrix<E> operator*(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
  Matrix<E> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

template <class E>
std::vector<E> operator*(const Matrix<E>& a, const std::vector<E>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product");
  std::vector<E> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_zero() && !x[j].is_zero()) out[i] += a(i, j) * x[j];
    }
  }
  return out;
}

namespace detail {

/// In-place reduced row echelon form of [m | rhs]. Pivot choice: leftmost
/// column first, topmost nonzero row. Returns the pivot column of each
/// pivot row.
template <class E>
std::vector<std::size_t> row_reduce(Matrix<E>& m, std::vector<E>* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
      if (rhs) std::swap((*rhs)[piv], (*rhs)[row]);
    }
    const E inv = E::one() / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    if (rhs) (*rhs)[row] = (*rhs)[row] * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const E factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
      if (rhs && !(*rhs)[row].is_zero()) (*rhs)[r] -= factor * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

/// One exact solution of m * x = rhs, or nullopt when the system is
/// inconsistent. Free variables are set to zero. E must be a field type.
template <class E>
std::optional<std::vector<E>> linsolve(const Matrix<E>& m, const std::vector<E>& rhs) {
  if (rhs.size() != m.rows()) {
    throw DimensionMismatch("rhs has " + std::to_string(rhs.size()) + " entries, matrix has " +
                            std::to_string(m.rows()) + " rows");
  }
  Matrix<E> work = m;
  std::vector<E> b = rhs;
  const auto pivots = detail::row_reduce(work, &b);
  for (std::size_t r = pivots.size(); r < work.rows(); ++r) {
    if (!b[r].is_zero()) return std::nullopt;
  }
  std::vector<E> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = b[r];
  return x;
}

template <class E>
std::size_t matrix_rank(const Matrix<E>& m) {
  Matrix<E> work = m;
  return detail::row_reduce<E>(work, nullptr).size();
}

/// Inverse over a field, or nullopt when singular.
template <class E>
std::optional<Matrix<E>> inverse(const Matrix<E>& m) {
  if (!m.is_square()) throw NotSquare();
  const std::size_t n = m.rows();
  Matrix<E> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = E::one();
  }
  const auto pivots = detail::row_reduce<E>(aug, nullptr);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<E> inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

/// Determinant by fraction-free (Bareiss) elimination. E must be an
/// integral domain with an exact_quotient overload. The 0x0 determinant is 1.
template <class E>
E det_bareiss(const Matrix<E>& m) {
  if (!m.is_square()) throw NotSquare();
  const std::size_t n = m.rows();
  if (n == 0) return E::one();
  Matrix<E> a = m;
  E prev = E::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) return E::zero();
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(k, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_quotient(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      }
      a(i, k) = E::zero();
    }
    prev = a(k, k);
  }
  E det = a(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace nakayama
