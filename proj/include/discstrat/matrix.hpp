#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "discstrat/dense_poly.hpp"
#include "discstrat/multipoly.hpp"
#include "discstrat/rational.hpp"

namespace discstrat {

/// Row-major dense matrix over a commutative ring T.
///
/// T must provide +, -, *, unary -, and the free functions is_zero(T) and
/// exact_div(T, T) (division known to be exact).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw std::invalid_argument("entry count differs from rows*cols");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<T>& entries() const { return entries_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Matrix with row r and column c removed.
  Matrix minor_matrix(std::size_t r, std::size_t c) const {
    std::vector<T> e;
    e.reserve((rows_ - 1) * (cols_ - 1));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (j != c) e.push_back((*this)(i, j));
    }
    return Matrix(rows_ - 1, cols_ - 1, std::move(e));
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> e;
    e.reserve(entries_.size());
    for (const auto& v : entries_) e.push_back(f(v));
    return Matrix<U>(rows_, cols_, std::move(e));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using PolyMatrix = Matrix<MultiPoly>;
using RationalMatrix = Matrix<BigRational>;

/// Fraction-free (Bareiss) determinant. Requires a square matrix of
/// dimension >= 1; every division performed is exact over an integral domain.
template <class T>
T determinant_bareiss(Matrix<T> m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  bool negate = false;
  std::optional<T> prev;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return m(k, k) - m(k, k);  // zero column below the diagonal
      m.swap_rows(k, p);
      negate = !negate;
    }
    const T pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = pivot * m(i, j);
        if (!is_zero(lead) && !is_zero(m(k, j))) v = v - lead * m(k, j);
        m(i, j) = prev ? exact_div(v, *prev) : std::move(v);
      }
      m(i, k) = m(i, k) - m(i, k);
    }
    prev = pivot;
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Laplace expansion along the first row. Factorial cost; used for small
/// dimensions and as an independent check on Bareiss.
template <class T>
T determinant_cofactor(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  std::optional<T> acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m(0, c))) continue;
    T term = m(0, c) * determinant_cofactor(m.minor_matrix(0, c));
    if (c % 2 == 1) term = -term;
    acc = acc ? T(*acc + term) : term;
  }
  return acc ? *acc : T(m(0, 0) - m(0, 0));
}

/// Determinant with the strategy the size calls for: cofactor expansion up to
/// dimension 4, Bareiss beyond.
template <class T>
T determinant(const Matrix<T>& m) {
  if (m.is_square() && m.rows() <= 4) return determinant_cofactor(m);
  return determinant_bareiss(m);
}

/// Exact rank by fraction-free Gaussian elimination with pivot search.
inline std::size_t rank_at_point(RationalMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  BigRational prev(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    // Largest-magnitude nonzero pivot in the column.
    std::optional<std::size_t> pivot_row;
    for (std::size_t r = rank; r < rows; ++r) {
      if (is_zero(m(r, c))) continue;
      if (!pivot_row || abs(m(r, c)) > abs(m(*pivot_row, c))) pivot_row = r;
    }
    if (!pivot_row) continue;
    m.swap_rows(rank, *pivot_row);
    const BigRational pivot = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigRational lead = m(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) m(r, j) = (pivot * m(r, j) - lead * m(rank, j)) / prev;
      m(r, c) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

/// Entrywise evaluation of a polynomial matrix.
inline RationalMatrix evaluate(const PolyMatrix& m, std::span<const BigRational> point) {
  return m.map([&](const MultiPoly& p) { return evaluate(p, point); });
}

}  // namespace discstrat
