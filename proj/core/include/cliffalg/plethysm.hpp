#pragma once

#include <cliffalg/root_system.hpp>
#include <cliffalg/weights.hpp>

#include <string>
#include <vector>

namespace cliffalg {

/// Weyl dimension formula. Throws PreconditionError unless lambda is dominant.
Integer weyl_dim(const RootSystemData& R, const Weight& lambda);

/// Weights of the irreducible module with highest weight lambda (Freudenthal's
/// recursion on dominant weights, then Weyl orbits).
WeightMultiset irrep_weights(const RootSystemData& R, const Weight& lambda);

/// (+-1/2, ..., +-1/2); sign > 0 keeps an even number of negative entries.
WeightMultiset halfspin_weights(int l, int sign);

/// True when the self-dual irreducible module V(lambda) carries an invariant
/// symmetric form, i.e. <lambda, 2 rho^vee> is even.
bool is_orthogonal(const RootSystemData& R, const Weight& lambda);

/// Weights of an orthogonal representation of dimension 2l, matched into l
/// pairs (mu, -mu); `representatives[i]` is the weight assigned to the i-th
/// Cartan coordinate of so(2l).
struct EmbeddingData {
  std::string subalgebra;
  std::vector<Weight> weights;
  std::vector<Weight> representatives;

  int l() const noexcept { return static_cast<int>(representatives.size()); }
  /// Same embedding with coordinate i assigned -representatives[i].
  EmbeddingData flipped(int i) const;
};

/// Pairs up the weights of an orthogonal representation. Nonzero weights are
/// represented by the member of positive height (ties broken lexicographically);
/// zero weights fill the remaining slots. Throws PreconditionError if the
/// multiset is not negation-closed or has an odd number of zero weights.
EmbeddingData make_embedding(const RootSystemData& R, const WeightMultiset& W);

/// mu = sum_i s_i representatives[i] for every (s_1, ..., s_l) in W.
WeightMultiset restrict_weights(const WeightMultiset& W, const EmbeddingData& E);

struct Constituent {
  Weight highest_weight;
  std::vector<Rational> dynkin_labels;
  Integer dim;
  long long multiplicity = 1;
};

struct Decomposition {
  std::vector<Constituent> constituents;
  bool irreducible() const { return constituents.size() == 1 && constituents.front().multiplicity == 1; }
};

/// Greedy peel-off of irreducible characters. Throws NotACharacter when W is
/// not a nonnegative combination of them.
Decomposition identify_irreducible(const WeightMultiset& W, const RootSystemData& R);

enum class PlethysmCase { G2, F4, C3 };

PlethysmCase parse_plethysm_case(const std::string& name);
std::string to_string(PlethysmCase c);

struct PlethysmReport {
  PlethysmCase which = PlethysmCase::G2;
  std::string subalgebra;
  Weight defining_highest_weight;
  Integer defining_dim;
  int l = 0;
  Weight rho;
  Decomposition plus;
  Decomposition minus;
  bool halfspin_agree = false;

  const Decomposition& halfspin(int sign) const { return sign > 0 ? plus : minus; }
};

/// G2: adjoint (D7); F4: 26-dimensional fundamental (D13); C3: orthogonal
/// 14-dimensional fundamental (D7).
PlethysmReport verify_plethysm(PlethysmCase which);

}  // namespace cliffalg
