#pragma once

#include <cliffalg/linalg.hpp>
#include <cliffalg/multivector.hpp>
#include <cliffalg/weights.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cliffalg {

enum class SpinType { B, D };

struct WittGenerator {
  enum class Kind { N, P, U };
  Kind kind = Kind::N;
  int index = 1;  ///< 1..l for n_i, p_i; ignored for u
};

/// Split form on M = N + P (+ U). Generator numbering in the induced
/// QuadraticSpace: n_i -> i, p_i -> l + i, u -> 2l + 1.
/// Gram entries: Q[n_i][p_i] = 1/2 (so b(n_i, p_i) = 1) and Q[u][u] = 1.
class WittDecomposition {
 public:
  WittDecomposition(int l, bool odd);

  int rank() const noexcept { return l_; }
  bool odd() const noexcept { return odd_; }
  int dim() const noexcept { return odd_ ? 2 * l_ + 1 : 2 * l_; }
  const SpaceQ& space() const noexcept { return space_; }

  int number_of(const WittGenerator& g) const;
  WittGenerator generator(int k) const;
  std::string name(int k) const;

 private:
  int l_;
  bool odd_;
  SpaceQ space_;
};

/// Spinor basis elements are subsets of {1..l} stored as bitmasks (bit i-1 for
/// n_i); a spinor is a sparse combination of them.
using Spinor = SparseVector;

/// g . omega on S = Lambda N. With s = #{j in omega : j < i}:
///   n_i omega = (-1)^s n_i ^ omega   (0 if i in omega)
///   p_i omega = (-1)^s omega \ {i}   (0 if i not in omega)
///   u omega   = (-1)^|omega| omega
Spinor clifford_action(const WittDecomposition& W, const WittGenerator& g, std::uint32_t omega);

/// Matrix of generator k (1..m) on S in the subset basis 0..2^l - 1.
Matrix<Rational> generator_matrix(const WittDecomposition& W, int k);

/// rho(x) for an arbitrary element of the Clifford algebra of W.space().
Matrix<Rational> action_matrix(const WittDecomposition& W, const MultivectorQ& x);

inline bool spinor_parity_odd(std::uint32_t omega) { return (std::popcount(omega) & 1) != 0; }

struct IsomorphismReport {
  int rank = 0;
  bool odd = false;
  int source_dim = 0;  ///< dim Cl^+
  int target_dim = 0;  ///< dim End(S), or dim End(S+) + dim End(S-)
  int image_rank = 0;
  bool relations_hold = false;
  bool homomorphism_holds = false;
  bool blocks_hold = false;  ///< even case: Cl^+ preserves S+ and S-
  std::optional<std::string> failure;

  bool bijective() const noexcept {
    return !failure && relations_hold && homomorphism_holds && blocks_hold && image_rank == source_dim &&
           source_dim == target_dim;
  }
};

/// Verifies that Cl^+ maps isomorphically onto End(S) (odd) or End(S+) + End(S-) (even).
IsomorphismReport even_algebra_isomorphism_check(const WittDecomposition& W);

/// h_i = (n_i p_i - p_i n_i) / 2 in the Clifford algebra of W.
MultivectorQ cartan_element(const WittDecomposition& W, int i);

struct SpinorWeights {
  WeightMultiset all;
  WeightMultiset plus;   ///< even subsets (contains the empty monomial)
  WeightMultiset minus;  ///< odd subsets
};

/// Weights of S, S+ and S- read off the diagonal action of the h_i.
SpinorWeights spinor_module_weights(SpinType type, int l);
WeightMultiset spin_weights(SpinType type, int l);

struct RestrictionReport {
  int rank = 0;
  bool embedding_holds = false;  ///< the Witt basis built from M-bar + <v'> has the expected Gram matrix
  WeightMultiset restricted_plus;
  WeightMultiset restricted_minus;
  WeightMultiset target;  ///< spin weights of B_(l-1)
  bool ok() const { return embedding_holds && restricted_plus == target && restricted_minus == target; }
};

/// Restricts the half-spin modules of D_l to B_(l-1) (l >= 2).
RestrictionReport restrict_even_to_odd(int l);

struct CentralInvolutionReport {
  int rank = 0;
  MultivectorQ w;
  bool orthogonal_basis = false;
  bool square_is_one = false;
  bool anticommutes = false;
  std::optional<Rational> c;  ///< rho(w) = c on S+ and -c on S-, when it holds
  bool ok() const { return orthogonal_basis && square_is_one && anticommutes && c.has_value(); }
};

/// w = x_1 y_1 ... x_l y_l with x_i = n_i + p_i, y_i = n_i - p_i, for the
/// split even form of Witt index l.
CentralInvolutionReport central_involution_check(int l);

}  // namespace cliffalg
