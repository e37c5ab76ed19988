#pragma once

#include <cliffalg/blade.hpp>
#include <cliffalg/error.hpp>
#include <cliffalg/quadratic_space.hpp>
#include <cliffalg/ring.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace cliffalg {

/// Dense row-major matrix over an exact ring.
template <CoefficientRing F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, F(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged matrix rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  F& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<std::vector<F>> to_rows() const {
    std::vector<std::vector<F>> out(rows_, std::vector<F>(cols_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!cliffalg::is_zero(x)) return false;
    return true;
  }

  F trace() const {
    F t(0);
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x = F(x * s);
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (cliffalg::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j)
          if (!cliffalg::is_zero(b(k, j))) r(i, j) += F(aik * b(k, j));
      }
    return r;
  }
  friend std::vector<F> operator*(const Matrix& a, const std::vector<F>& v) {
    if (a.cols_ != static_cast<int>(v.size())) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<F> r(a.rows_, F(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k)
        if (!cliffalg::is_zero(a(i, k)) && !cliffalg::is_zero(v[k])) r[i] += F(a(i, k) * v[k]);
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> data_;
};

template <CoefficientRing F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

/// Reduced row echelon form over a field.
template <ExactField F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<int> pivot_cols;
  int rank() const noexcept { return static_cast<int>(pivot_cols.size()); }
};

template <ExactField F>
Echelon<F> row_reduce(Matrix<F> m) {
  Echelon<F> out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const F inv = F(F(1) / m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) = F(m(row, j) * inv);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) = F(m(i, j) - factor * m(row, j));
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <ExactField F>
int rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Basis of {x : m x = 0}.
template <ExactField F>
std::vector<std::vector<F>> kernel(const Matrix<F>& m) {
  const Echelon<F> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (int r = 0; r < e.rank(); ++r) v[e.pivot_cols[r]] = F(-e.reduced(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = rhs, or nullopt when the system is inconsistent.
template <ExactField F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw DimensionMismatch("rhs length differs from row count");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const Echelon<F> e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), F(0));
  for (int r = 0; r < e.rank(); ++r) x[e.pivot_cols[r]] = e.reduced(r, m.cols());
  return x;
}

/// Inverse of a square matrix, or nullopt when it is singular.
template <ExactField F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const int n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  const Echelon<F> e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <ExactField F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const int n = m.rows();
  F det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!is_zero(m(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return F(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      det = F(-det);
    }
    det = F(det * m(col, col));
    const F inv = F(F(1) / m(col, col));
    for (int i = col + 1; i < n; ++i) {
      if (is_zero(m(i, col))) continue;
      const F factor = F(m(i, col) * inv);
      for (int j = col; j < n; ++j) m(i, j) = F(m(i, j) - factor * m(col, j));
    }
  }
  return det;
}

/// Rank of the matrix 2Q of the polar form b_q.
template <ExactField F>
int degeneracy_rank(const QuadraticSpace<F>& V) {
  Matrix<F> m = Matrix<F>::from_rows(V.gram());
  m *= F(2);
  return rank(m);
}

/// Sparse vector over Q keyed by coordinate (typically a blade).
using SparseVector = std::map<std::uint32_t, Rational>;

/// Incrementally built echelon basis of a subspace of Q^N with sparse rows.
/// Each stored row has its smallest coordinate as pivot, normalized to 1.
class SparseSpan {
 public:
  /// Adds v to the span; returns true when v was independent.
  bool insert(const SparseVector& v);
  /// Canonical representative of v modulo the span: zero on every pivot
  /// coordinate. It is linear in v and zero iff v lies in the span.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  const std::map<std::uint32_t, SparseVector>& rows() const noexcept { return rows_; }

 private:
  std::map<std::uint32_t, SparseVector> rows_;  // pivot -> row
};

}  // namespace cliffalg
