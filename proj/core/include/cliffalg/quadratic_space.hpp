#pragma once

#include <cliffalg/error.hpp>
#include <cliffalg/ring.hpp>

#include <string>
#include <vector>

namespace cliffalg {

template <CoefficientRing R>
using SquareMatrix = std::vector<std::vector<R>>;

/// Free module of rank m with the quadratic form q(x) = x^T Q x.
///
/// Q is the stored, canonical datum. The polar form is
/// b(x, y) = q(x + y) - q(x) - q(y) = 2 x^T Q y, so b(e_i, e_i) = 2 q(e_i)
/// and the Clifford relations read e_i e_j + e_j e_i = b(e_i, e_j).
/// Generators are numbered 1..m throughout the public API.
template <CoefficientRing R>
class QuadraticSpace {
 public:
  using Ring = R;

  QuadraticSpace(int m, SquareMatrix<R> gram) : m_(m), gram_(std::move(gram)) {
    if (m < 1 || m > kMaxGenerators)
      throw PreconditionError("quadratic space dimension must lie in [1, 31], got " + std::to_string(m));
    if (static_cast<int>(gram_.size()) != m) throw DimensionMismatch("Q must have m rows");
    for (const auto& row : gram_)
      if (static_cast<int>(row.size()) != m) throw DimensionMismatch("Q must be square");
    diagonal_ = true;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        if (!(gram_[i][j] == gram_[j][i])) throw PreconditionError("Q must be symmetric");
        if (i != j && !is_zero(gram_[i][j])) diagonal_ = false;
      }
  }

  static QuadraticSpace zero(int m) { return QuadraticSpace(m, SquareMatrix<R>(m, std::vector<R>(m, R(0)))); }

  static QuadraticSpace diagonal(const std::vector<R>& diag) {
    const int m = static_cast<int>(diag.size());
    SquareMatrix<R> g(m, std::vector<R>(m, R(0)));
    for (int i = 0; i < m; ++i) g[i][i] = diag[i];
    return QuadraticSpace(m, std::move(g));
  }

  static QuadraticSpace identity(int m) { return diagonal(std::vector<R>(m, R(1))); }

  int dim() const noexcept { return m_; }
  const SquareMatrix<R>& gram() const noexcept { return gram_; }
  bool is_diagonal() const noexcept { return diagonal_; }

  /// q(e_i), 1-based.
  const R& q(int i) const { return gram_.at(i - 1).at(i - 1); }
  /// b(e_i, e_j) = 2 Q[i][j], 1-based.
  R b(int i, int j) const { return R(R(2) * gram_.at(i - 1).at(j - 1)); }

  void check_index(int i) const {
    if (i < 1 || i > m_)
      throw IndexOutOfRange("generator index " + std::to_string(i) + " outside [1, " + std::to_string(m_) + "]");
  }

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) {
    return a.m_ == b.m_ && a.gram_ == b.gram_;
  }

 private:
  int m_;
  SquareMatrix<R> gram_;
  bool diagonal_ = true;
};

/// Value of the quadratic form on a coordinate vector.
template <CoefficientRing R>
R evaluate_form(const QuadraticSpace<R>& V, const std::vector<R>& x) {
  if (static_cast<int>(x.size()) != V.dim()) throw DimensionMismatch("vector length differs from dim");
  R acc(0);
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j) acc += R(x[i] * V.gram()[i][j] * x[j]);
  return acc;
}

}  // namespace cliffalg
