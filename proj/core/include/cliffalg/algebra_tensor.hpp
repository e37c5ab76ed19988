#pragma once

#include <cliffalg/blade.hpp>
#include <cliffalg/error.hpp>
#include <cliffalg/linalg.hpp>
#include <cliffalg/multivector.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cliffalg {

/// Structure constants of a finite-dimensional algebra on a fixed basis:
/// b_i * b_j = sum_k c[{i, j, k}] b_k. Only nonzero constants are stored.
template <CoefficientRing R>
struct AlgebraTensor {
  int dim = 0;
  int identity = 0;
  /// Optional blade labels of the basis (empty for abstract tensors).
  std::vector<Blade> basis;
  std::map<std::array<int, 3>, R> c;

  R at(int i, int j, int k) const {
    auto it = c.find({i, j, k});
    return it == c.end() ? R(0) : it->second;
  }

  void add(int i, int j, int k, const R& v) {
    if (is_zero(v)) return;
    auto [it, ins] = c.try_emplace({i, j, k}, v);
    if (!ins) {
      it->second += v;
      if (is_zero(it->second)) c.erase(it);
    }
  }

  /// Product of coordinate vectors.
  std::vector<R> multiply(const std::vector<R>& x, const std::vector<R>& y) const {
    std::vector<R> r(dim, R(0));
    for (const auto& [idx, v] : c) {
      const auto [i, j, k] = idx;
      if (is_zero(x[i]) || is_zero(y[j])) continue;
      r[k] += R(x[i] * y[j] * v);
    }
    return r;
  }

  /// Matrix of y -> b_i * y.
  Matrix<R> left_multiplication(int i) const {
    Matrix<R> L(dim, dim);
    for (const auto& [idx, v] : c)
      if (idx[0] == i) L(idx[2], idx[1]) += v;
    return L;
  }

  friend bool operator==(const AlgebraTensor& a, const AlgebraTensor& b) {
    return a.dim == b.dim && a.identity == b.identity && a.basis == b.basis && a.c == b.c;
  }
};

/// Checks that `identity` is a two-sided unit. Returns a description of the
/// first failure, or nullopt.
template <CoefficientRing R>
std::optional<std::string> unitality_defect(const AlgebraTensor<R>& T) {
  const int e = T.identity;
  if (e < 0 || e >= T.dim) return "identity index out of range";
  for (int j = 0; j < T.dim; ++j)
    for (int k = 0; k < T.dim; ++k) {
      const R want = j == k ? R(1) : R(0);
      if (!(T.at(e, j, k) == want)) return "left unit fails at basis element " + std::to_string(j);
      if (!(T.at(j, e, k) == want)) return "right unit fails at basis element " + std::to_string(j);
    }
  return std::nullopt;
}

/// Checks associativity on all basis triples.
template <CoefficientRing R>
std::optional<std::string> associativity_defect(const AlgebraTensor<R>& T) {
  for (int i = 0; i < T.dim; ++i)
    for (int j = 0; j < T.dim; ++j)
      for (int k = 0; k < T.dim; ++k) {
        std::vector<R> ei(T.dim, R(0)), ej(T.dim, R(0)), ek(T.dim, R(0));
        ei[i] = R(1);
        ej[j] = R(1);
        ek[k] = R(1);
        if (T.multiply(T.multiply(ei, ej), ek) != T.multiply(ei, T.multiply(ej, ek)))
          return "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" + std::to_string(k) + " != b" +
                 std::to_string(i) + " (b" + std::to_string(j) + " b" + std::to_string(k) + ")";
      }
  return std::nullopt;
}

/// Multiplication tensor of the subalgebra spanned by `basis` (which must be
/// closed under the product) inside the Clifford algebra of V.
template <CoefficientRing R>
AlgebraTensor<R> subalgebra_tensor(const std::vector<Blade>& basis, const QuadraticSpace<R>& V) {
  AlgebraTensor<R> T;
  T.dim = static_cast<int>(basis.size());
  T.basis = basis;
  std::map<Blade, int> position;
  for (int i = 0; i < T.dim; ++i) position[basis[i]] = i;
  T.identity = position.count(0) ? position.at(0) : -1;
  for (int i = 0; i < T.dim; ++i)
    for (int j = 0; j < T.dim; ++j) {
      const auto prod = geometric_product(Multivector<R>::blade(basis[i]), Multivector<R>::blade(basis[j]), V);
      for (const auto& [b, v] : prod.terms()) {
        auto it = position.find(b);
        if (it == position.end()) throw NotInSpan("basis is not closed under the product: " + blade_name(b));
        T.add(i, j, it->second, v);
      }
    }
  return T;
}

template <ParametricRing P>
AlgebraTensor<Rational> specialize(const AlgebraTensor<P>& T, const Rational& at) {
  AlgebraTensor<Rational> r;
  r.dim = T.dim;
  r.identity = T.identity;
  r.basis = T.basis;
  for (const auto& [idx, v] : T.c) {
    auto s = specialize_coefficient(v, at);
    if (!s)
      throw PoleError("structure constant c[" + std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                          std::to_string(idx[2]) + "]",
                      to_string(at));
    r.add(idx[0], idx[1], idx[2], *s);
  }
  return r;
}

template <CoefficientRing To, CoefficientRing From>
AlgebraTensor<To> convert(const AlgebraTensor<From>& T) {
  AlgebraTensor<To> r;
  r.dim = T.dim;
  r.identity = T.identity;
  r.basis = T.basis;
  for (const auto& [idx, v] : T.c) r.add(idx[0], idx[1], idx[2], To(v));
  return r;
}

/// Full matrix algebra M_n on the basis E_{ab} (index a*n + b), unit = sum E_aa.
/// The identity is not a basis element, so the basis is changed to
/// {I, E_01, ..., } replacing E_00 by I.
AlgebraTensor<Rational> matrix_algebra_tensor(int n);

}  // namespace cliffalg
