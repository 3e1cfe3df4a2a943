#pragma once
// Dense exact rational matrices with Gaussian elimination (rank, solve,
// nullspace). Sizes here are desk scale (<= a few hundred rows), so a plain
// fraction-based elimination is fine.

#include <vector>

#include "polarcat/scalars.hpp"

namespace polarcat {

class QMat {
 public:
  int rows = 0, cols = 0;
  std::vector<Rational> a;  // row-major

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Rational(0)) {}
  static QMat identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  Rational& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  const Rational& operator()(int i, int j) const {
    return a[(size_t)i * cols + j];
  }
  bool is_zero() const {
    for (auto& x : a)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const QMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  friend QMat operator+(const QMat& x, const QMat& y) {
    QMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
  }
  friend QMat operator-(const QMat& x, const QMat& y) {
    QMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }
  friend QMat operator*(const Rational& c, const QMat& x) {
    QMat r = x;
    for (auto& v : r.a) v *= c;
    return r;
  }
  friend QMat operator*(const QMat& x, const QMat& y) {
    QMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const Rational& v = x(i, k);
        if (v == 0) continue;
        for (int j = 0; j < y.cols; ++j) {
          const Rational& w = y(k, j);
          if (w != 0) r(i, j) += v * w;
        }
      }
    return r;
  }
  QMat transpose() const {
    QMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  QMat pow(int k) const {
    QMat r = identity(rows);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }
  Rational trace() const {
    Rational t(0);
    for (int i = 0; i < rows; ++i) t += (*this)(i, i);
    return t;
  }
};

// Row-reduce in place; returns rank. If `track` is nonnull it receives the
// pivot column indices.
inline int row_reduce(QMat& m, std::vector<int>* pivots = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    Rational p = m(rank, col);
    for (int j = col; j < m.cols; ++j) m(rank, j) /= p;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      Rational f = m(i, col);
      if (f == 0) continue;
      for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(rank, j);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

inline int rank_of(QMat m) { return row_reduce(m); }

// Basis of the right nullspace of m (each column of the result is a kernel
// vector).
inline QMat nullspace(QMat m) {
  std::vector<int> pivots;
  row_reduce(m, &pivots);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : pivots) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  QMat ker(m.cols, (int)free_cols.size());
  for (size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    ker(fc, (int)f) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) ker(pivots[r], (int)f) = -m((int)r, fc);
  }
  return ker;
}

// Solve A x = b exactly. Returns empty optional if inconsistent; throws
// SolveUnderdetermined if the solution is not unique.
inline std::optional<std::vector<Rational>> solve_unique(
    QMat A, std::vector<Rational> b) {
  QMat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    aug(i, A.cols) = b[i];
  }
  std::vector<int> pivots;
  row_reduce(aug, &pivots);
  for (int c : pivots)
    if (c == A.cols) return std::nullopt;  // inconsistent
  if ((int)pivots.size() < A.cols)
    throw CatError(Err::SolveUnderdetermined, "linear system underdetermined");
  std::vector<Rational> x(A.cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug((int)r, A.cols);
  return x;
}

}  // namespace polarcat
