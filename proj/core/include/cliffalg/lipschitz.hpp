#pragma once

#include <cliffalg/linalg.hpp>
#include <cliffalg/multivector.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cliffalg {

/// Basis of Cl^0 = sum_j Lambda^j(Delta) Lambda^j(Delta') in the delta
/// presentation: the blades delta_I delta'_J with |I| = |J|. In delta
/// coordinates these unit vectors already form the reduced echelon basis.
struct Cl0Subspace {
  int m = 0;
  std::vector<Blade> basis;  ///< bits 0..m-1: delta_i, bits m..2m-1: delta'_i
  int dim() const noexcept { return static_cast<int>(basis.size()); }
  bool contains_blade(Blade b) const noexcept;
};

/// Cl(q + (-q)) for a base space V of dimension m <= 15, in two presentations:
///   standard: generators f_1..f_m (= (e_i, 0)) and g_1..g_m (= (0, e_i)) with Gram diag(Q, -Q);
///   split:    generators delta_1..delta_m, delta'_1..delta'_m with Gram [[0, 2Q], [2Q, 0]],
///             delta_i = f_i + g_i, delta'_i = f_i - g_i.
/// Cl^0 is the degree-0 part of the Z-grading deg delta = 1, deg delta' = -1
/// (every defining relation is homogeneous for it). Membership is decided by
/// the grading derivation D, which sends f_i -> g_i and g_i -> f_i in the
/// standard presentation: z lies in Cl^0 iff D(z) = 0.
class DoubledAlgebra {
 public:
  explicit DoubledAlgebra(const SpaceQ& V);

  int base_dim() const noexcept { return m_; }
  const SpaceQ& base() const noexcept { return base_; }
  const SpaceQ& standard_space() const noexcept { return standard_; }
  const SpaceQ& split_space() const noexcept { return split_; }
  const Cl0Subspace& cl0() const noexcept { return cl0_; }

  /// Generators in the standard presentation (indices m+1..2m for g).
  MultivectorQ f(int i) const;
  MultivectorQ g(int i) const;
  MultivectorQ delta(int i) const { return f(i) + g(i); }
  MultivectorQ delta_prime(int i) const { return f(i) - g(i); }

  /// x (x) y realized as F(x) G(y) in the standard presentation: F sends e_i to
  /// f_i; G is the graded anti-map with G(e_{i1} ... e_{ik}) = (-1)^{k(k-1)/2} g_{ik} ... g_{i1}.
  template <CoefficientRing R>
  Multivector<R> embed_pair(const Multivector<R>& x, const Multivector<R>& y) const;

  /// D(z) for z in the standard presentation.
  MultivectorQ grading_derivation(const MultivectorQ& z) const;
  bool in_cl0(const MultivectorQ& z) const { return grading_derivation(z).is_zero(); }

  /// Rewrites z from the standard into the split presentation (exponential in
  /// the blade sizes; meant for cross-checks on small m).
  MultivectorQ to_split(const MultivectorQ& z) const;
  bool in_cl0_by_coordinates(const MultivectorQ& z) const;

 private:
  int m_;
  SpaceQ base_;
  SpaceQ standard_;
  SpaceQ split_;
  Cl0Subspace cl0_;
};

template <CoefficientRing R>
Multivector<R> DoubledAlgebra::embed_pair(const Multivector<R>& x, const Multivector<R>& y) const {
  detail::check_fits(x, convert<R>(base_));
  detail::check_fits(y, convert<R>(base_));
  // G(e_B) = (-1)^{k(k-1)/2} tau_{-q}(e_B), shifted onto the g generators.
  SquareMatrix<R> neg(m_, std::vector<R>(m_, R(0)));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) neg[i][j] = R(-R(base_.gram()[i][j]));
  const QuadraticSpace<R> minus(m_, std::move(neg));
  Multivector<R> gy;
  for (const auto& [b, c] : y.terms()) {
    const int k = grade(b);
    const R sign = ((k * (k - 1) / 2) & 1) ? R(-1) : R(1);
    const Multivector<R> rev = reverse(Multivector<R>::blade(b), minus);
    for (const auto& [rb, rc] : rev.terms())
      gy.add_term(rb << m_, R(sign * rc * c));
  }
  // f-blades precede g-blades, so F(x) G(y) is plain concatenation.
  Multivector<R> out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : gy.terms()) out.add_term(a | b, R(ca * cb));
  return out;
}

/// Homogeneous and x (x) tau(x) in Cl^0.
bool is_lipschitz(const MultivectorQ& x, const DoubledAlgebra& D);
bool is_lipschitz(const MultivectorQ& x, const SpaceQ& V);

struct LipschitzVerdict {
  bool homogeneous = false;
  bool cl0_member = false;
  std::optional<Rational> norm_scalar;  ///< x tau(x) when it is a scalar
  bool norm_two_sided = false;          ///< tau(x) x = x tau(x)
  std::string verdict;                  ///< "spin", "group", "monoid" or "none"
};

LipschitzVerdict classify_lipschitz(const MultivectorQ& x, const DoubledAlgebra& D);
LipschitzVerdict classify_lipschitz(const MultivectorQ& x, const SpaceQ& V);

/// Lipschitz and x tau(x) = tau(x) x a nonzero scalar.
bool is_glip(const MultivectorQ& x, const SpaceQ& V);
/// is_glip, even, and x tau(x) = 1.
bool is_spin_kernel(const MultivectorQ& x, const SpaceQ& V);

struct InfinitesimalReport {
  int m = 0;
  std::vector<MultivectorQ> solution_basis;  ///< even X with 1 + eps X Lipschitz
  bool equals_cl_plus_le2 = false;
  std::vector<MultivectorQ> spin_basis;  ///< solutions with X + tau(X) = 0
  int solution_dim() const noexcept { return static_cast<int>(solution_basis.size()); }
  int spin_dim() const noexcept { return static_cast<int>(spin_basis.size()); }
};

/// Solves the first-order Lipschitz condition over the dual numbers.
InfinitesimalReport infinitesimal_lipschitz(const SpaceQ& V);

}  // namespace cliffalg
