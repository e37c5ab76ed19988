#pragma once

#include <cliffalg/algebra_tensor.hpp>
#include <cliffalg/multivector.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cliffalg {

/// L_q: even elements of filtration degree <= 2, basis [e0, a_12, a_13, ..., a_(m-1)m]
/// with a_ij = e_i e_j, and the commutator table expanded in that basis.
template <CoefficientRing R>
struct EvenLieAlgebra {
  int m = 0;
  std::vector<Blade> basis;
  /// brackets[a][b] = coordinates of [basis[a], basis[b]].
  std::vector<std::vector<std::vector<R>>> brackets;

  int dim() const noexcept { return static_cast<int>(basis.size()); }
};

/// L'_q = L_q / k.e0 on the basis abar_ij (i < j), listed lexicographically.
template <CoefficientRing R>
struct QuotientLieAlgebra {
  int m = 0;
  std::vector<std::pair<int, int>> labels;
  /// constants[(a * n + b) * n + c] = coefficient of labels[c] in [labels[a], labels[b]].
  std::vector<R> constants;

  int dim() const noexcept { return static_cast<int>(labels.size()); }
  const R& at(int a, int b, int c) const {
    const std::size_t n = labels.size();
    return constants[(a * n + b) * n + c];
  }
  R& at(int a, int b, int c) {
    const std::size_t n = labels.size();
    return constants[(a * n + b) * n + c];
  }
  /// Position of abar_ij for 1 <= i < j <= m.
  int index_of(int i, int j) const {
    if (i >= j) std::swap(i, j);
    // Row-major index into the strict upper triangle.
    return (i - 1) * (2 * m - i) / 2 + (j - i - 1);
  }
  /// [x, y] for coordinate vectors.
  std::vector<R> bracket(const std::vector<R>& x, const std::vector<R>& y) const {
    const int n = dim();
    std::vector<R> r(n, R(0));
    for (int a = 0; a < n; ++a) {
      if (is_zero(x[a])) continue;
      for (int b = 0; b < n; ++b) {
        if (is_zero(y[b])) continue;
        const R xy(x[a] * y[b]);
        for (int c = 0; c < n; ++c)
          if (!is_zero(at(a, b, c))) r[c] += R(xy * at(a, b, c));
      }
    }
    return r;
  }

  friend bool operator==(const QuotientLieAlgebra&, const QuotientLieAlgebra&) = default;
};

namespace detail {

inline std::vector<std::pair<int, int>> pair_labels(int m) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace detail

template <CoefficientRing R>
Multivector<R> commutator(const Multivector<R>& x, const Multivector<R>& y, const QuadraticSpace<R>& V) {
  return geometric_product(x, y, V) - geometric_product(y, x, V);
}

/// Builds L_q and verifies that every bracket closes in the basis.
template <CoefficientRing R>
EvenLieAlgebra<R> build_even_lie(const QuadraticSpace<R>& V) {
  EvenLieAlgebra<R> L;
  L.m = V.dim();
  L.basis.push_back(0);
  for (const auto& [i, j] : detail::pair_labels(L.m)) L.basis.push_back(blade_of({i, j}));
  const int n = L.dim();
  std::map<Blade, int> position;
  for (int a = 0; a < n; ++a) position[L.basis[a]] = a;
  L.brackets.assign(n, std::vector<std::vector<R>>(n, std::vector<R>(n, R(0))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto br = commutator(Multivector<R>::blade(L.basis[a]), Multivector<R>::blade(L.basis[b]), V);
      for (const auto& [blade, v] : br.terms()) {
        auto it = position.find(blade);
        if (it == position.end())
          throw NotInSpan("bracket of " + blade_name(L.basis[a]) + " and " + blade_name(L.basis[b]) +
                          " leaves L_q via " + blade_name(blade));
        L.brackets[a][b][it->second] = v;
      }
    }
  return L;
}

/// Structure constants of L'_q, read off the geometric product.
template <CoefficientRing R>
QuotientLieAlgebra<R> structure_constants(const QuadraticSpace<R>& V) {
  if (V.dim() < 2) throw PreconditionError("structure constants need m >= 2");
  const EvenLieAlgebra<R> L = build_even_lie(V);
  QuotientLieAlgebra<R> Q;
  Q.m = V.dim();
  Q.labels = detail::pair_labels(Q.m);
  const int n = Q.dim();
  Q.constants.assign(static_cast<std::size_t>(n) * n * n, R(0));
  // Index 0 of L is e0; dropping it is the quotient map.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) Q.at(a, b, c) = L.brackets[a + 1][b + 1][c + 1];
  return Q;
}

/// Extracts the L'_q constants from a Cl^+ multiplication tensor whose basis
/// is the graded-lex even blade basis (as produced by theta_tensor).
template <CoefficientRing R>
QuotientLieAlgebra<R> lie_constants_from_tensor(const AlgebraTensor<R>& T, int m) {
  QuotientLieAlgebra<R> Q;
  Q.m = m;
  Q.labels = detail::pair_labels(m);
  const int n = Q.dim();
  if (T.dim < n + 1 || static_cast<int>(T.basis.size()) < n + 1)
    throw DimensionMismatch("tensor too small for the degree-2 part");
  for (int a = 0; a < n; ++a)
    if (T.basis[a + 1] != blade_of({Q.labels[a].first, Q.labels[a].second}))
      throw PreconditionError("tensor basis is not in graded-lex blade order");
  Q.constants.assign(static_cast<std::size_t>(n) * n * n, R(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) Q.at(a, b, c) = R(T.at(a + 1, b + 1, c + 1) - T.at(b + 1, a + 1, c + 1));
  return Q;
}

/// Returns a description of the first antisymmetry or Jacobi failure.
template <CoefficientRing R>
std::optional<std::string> lie_defect(const QuotientLieAlgebra<R>& Q) {
  const int n = Q.dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!(R(Q.at(a, b, c) + Q.at(b, a, c)) == R(0)))
          return "antisymmetry fails at (" + std::to_string(a) + "," + std::to_string(b) + ")";
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] coordinate-wise.
        for (int d = 0; d < n; ++d) {
          R s(0);
          for (int e = 0; e < n; ++e) {
            s += R(Q.at(b, c, e) * Q.at(a, e, d));
            s += R(Q.at(c, a, e) * Q.at(b, e, d));
            s += R(Q.at(a, b, e) * Q.at(c, e, d));
          }
          if (!is_zero(s))
            return "Jacobi fails on (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        }
      }
  return std::nullopt;
}

namespace detail {

/// Coordinate of the ordered element abar_(a,b) = e_a e_b mod e0 inside [abar_(i,j), abar_(k,l)].
template <CoefficientRing R>
R ordered_coordinate(const QuotientLieAlgebra<R>& Q, int i, int j, int k, int l, int a, int b) {
  const int s = ((i < j) ? 1 : -1) * ((k < l) ? 1 : -1) * ((a < b) ? 1 : -1);
  const R& v = Q.at(Q.index_of(i, j), Q.index_of(k, l), Q.index_of(a, b));
  return s > 0 ? v : R(-v);
}

}  // namespace detail

/// Recovers Q from the bracket table of L'_q (m >= 3), then re-derives the
/// table from the recovered form and throws InconsistentConstants if the two
/// disagree. For distinct i, j, l:
///   [abar_ij, abar_jl] = 2 q(e_j) abar_il - b(e_i, e_j) abar_jl - b(e_j, e_l) abar_ij.
template <CoefficientRing R>
QuadraticSpace<R> reconstruct_form(const QuotientLieAlgebra<R>& L) {
  const int m = L.m;
  if (m < 3) throw PreconditionError("form reconstruction needs m >= 3 (the bracket table is too small below)");
  if (L.dim() != m * (m - 1) / 2 || L.constants.size() != static_cast<std::size_t>(L.dim()) * L.dim() * L.dim())
    throw DimensionMismatch("structure constant table has the wrong size");
  const R half(Rational(1, 2));
  SquareMatrix<R> g(m, std::vector<R>(m, R(0)));
  auto others = [m](int x, int y) {
    for (int z = 1; z <= m; ++z)
      if (z != x && z != y) return z;
    return 0;
  };
  for (int j = 1; j <= m; ++j) {
    const int i = others(j, j);
    int l = 0;
    for (int z = 1; z <= m; ++z)
      if (z != j && z != i) {
        l = z;
        break;
      }
    g[j - 1][j - 1] = R(half * detail::ordered_coordinate(L, i, j, j, l, i, l));
  }
  for (int j = 1; j <= m; ++j)
    for (int l = j + 1; l <= m; ++l) {
      const int i = others(j, l);
      const R bjl(-detail::ordered_coordinate(L, i, j, j, l, i, j));
      g[j - 1][l - 1] = R(half * bjl);
      g[l - 1][j - 1] = g[j - 1][l - 1];
    }
  QuadraticSpace<R> V(m, std::move(g));
  const QuotientLieAlgebra<R> again = structure_constants(V);
  if (!(again.constants == L.constants)) {
    const int n = L.dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!(again.at(a, b, c) == L.at(a, b, c)))
            throw InconsistentConstants(
                "constants do not come from a quadratic form: coefficient of abar_" +
                std::to_string(L.labels[c].first) + std::to_string(L.labels[c].second) + " in [abar_" +
                std::to_string(L.labels[a].first) + std::to_string(L.labels[a].second) + ", abar_" +
                std::to_string(L.labels[b].first) + std::to_string(L.labels[b].second) + "] is " +
                coefficient_string(L.at(a, b, c)) + ", the recovered form gives " +
                coefficient_string(again.at(a, b, c)));
  }
  return V;
}

/// Multiplication tensor of Cl^+_q on the graded-lex even blade basis with
/// identity e0 (index 0).
template <CoefficientRing R>
AlgebraTensor<R> theta_tensor(const QuadraticSpace<R>& V) {
  return subalgebra_tensor(even_blades(V.dim()), V);
}

/// Recovers Q from a theta tensor's degree <= 2 part.
template <CoefficientRing R>
QuadraticSpace<R> reconstruct_from_tensor(const AlgebraTensor<R>& T, int m) {
  return reconstruct_form(lie_constants_from_tensor(T, m));
}

struct IntegralityReport {
  bool constants_regular = false;  ///< every structure constant of L' is regular at t = 0
  bool form_regular = false;       ///< every entry of 2Q(t) is regular at t = 0
  bool agree() const noexcept { return constants_regular == form_regular; }
};

/// Both integrality criteria for a one-parameter family (m >= 3).
IntegralityReport integrality_report(const QuadraticSpace<RationalFunction>& family);

/// True iff the family's L' structure constants are regular at t = 0.
/// Throws std::logic_error if the two criteria disagree.
bool integrality_witness(const QuadraticSpace<RationalFunction>& family);

}  // namespace cliffalg
