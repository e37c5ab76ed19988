#pragma once

#include <cliffalg/algebra_tensor.hpp>
#include <cliffalg/lie_structure.hpp>
#include <cliffalg/linalg.hpp>

#include <map>
#include <vector>

namespace cliffalg {

using QuadraticFamily = QuadraticSpace<RationalFunction>;

/// Multiplication tensor of Cl^+ of a family, after checking that every
/// entry of Q(t) is regular at t = 0.
template <ParametricRing P>
AlgebraTensor<P> family_tensor(const QuadraticSpace<P>& F) {
  const Rational origin(0);
  for (int i = 0; i < F.dim(); ++i)
    for (int j = 0; j < F.dim(); ++j)
      if (!regular_at(F.gram()[i][j], origin))
        throw PoleError("Q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", "0");
  return theta_tensor(F);
}

/// Gram matrix of the trace form (a, b) -> Tr(L_a L_b) of the regular representation.
template <ExactField F>
Matrix<F> trace_form(const AlgebraTensor<F>& T) {
  // (L_a)(k, j) = c[a][j][k]; Tr(L_a L_b) = sum_{j,k} c[a][j][k] c[b][k][j].
  std::vector<std::map<std::pair<int, int>, F>> L(T.dim);
  for (const auto& [idx, v] : T.c) L[idx[0]].emplace(std::pair{idx[1], idx[2]}, v);
  Matrix<F> G(T.dim, T.dim);
  for (int a = 0; a < T.dim; ++a)
    for (int b = a; b < T.dim; ++b) {
      F s(0);
      for (const auto& [jk, v] : L[a]) {
        auto it = L[b].find({jk.second, jk.first});
        if (it != L[b].end()) s += F(v * it->second);
      }
      G(a, b) = s;
      G(b, a) = s;
    }
  return G;
}

struct RadicalReport {
  int algebra_dim = 0;
  std::vector<std::vector<Rational>> basis;
  bool is_ideal = false;
  bool is_nil = false;
  int nilpotency_index = 0;  ///< least k with rad^k = 0 (0 for the zero radical)
  int dim() const noexcept { return static_cast<int>(basis.size()); }
};

/// Kernel of the trace form (char 0), with ideal and nilpotency checks.
RadicalReport jacobson_radical(const AlgebraTensor<Rational>& T);

struct SpecializationWitness {
  int m = 0;
  RationalFunction det;  ///< det 2Q(t)
  bool generic_semisimple = false;  ///< trace form of the generic fiber is nondegenerate over Q(t)
  bool fibers_free = false;         ///< canonical blades form a basis of every fiber; constants regular at 0
  int fiber_dim = 0;
  AlgebraTensor<Rational> special_fiber;
  RadicalReport radical;
  bool valid() const noexcept {
    return !det.is_zero() && generic_semisimple && fibers_free && fiber_dim == (1 << (m - 1)) && radical.is_ideal &&
           radical.is_nil;
  }
};

/// Certifies the family as a specialization of a matrix algebra (m odd).
SpecializationWitness certify_specialization(const QuadraticFamily& F);
SpecializationWitness certify_specialization(const QuadraticSpace<Polynomial>& F);

}  // namespace cliffalg
