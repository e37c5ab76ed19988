#pragma once

// Reference implementations that share no code with the library's algebra
// routines. They are slow and only meant to cross-check small cases.

#include <cliffalg/lie_structure.hpp>
#include <cliffalg/multivector.hpp>

#include <map>
#include <vector>

namespace cliffalg::oracle {

using Word = std::vector<int>;

/// Canonical form of a coefficient times a generator word, by bubble sort
/// with e_j e_i -> b(i,j) - e_i e_j (i < j) and e_i e_i -> q(e_i).
std::map<Word, Rational> normalize_word(const Word& w, const Rational& c, const SpaceQ& V);

/// Product by concatenating words and normalizing.
MultivectorQ product(const MultivectorQ& x, const MultivectorQ& y, const SpaceQ& V);

/// Product of generators e_{w[0]} e_{w[1]} ... as a multivector.
MultivectorQ word(const Word& w, const SpaceQ& V);

/// Closed-form L'_q brackets, entered index pattern by index pattern.
/// Returns the coordinates of [abar_ij, abar_kl] for i<j, k<l.
std::vector<Rational> closed_form_bracket(const SpaceQ& V, int i, int j, int k, int l);

/// A plausible but wrong four-index bracket (first term 2 b(i,l) abar_il).
/// Negative control: it must disagree with the product.
std::vector<Rational> naive_four_index_bracket(const SpaceQ& V, int i, int j, int k, int l);

/// Rank of the trace form Tr(L_a L_b) computed with plain dense elimination.
int trace_form_rank(const AlgebraTensor<Rational>& T);

}  // namespace cliffalg::oracle
