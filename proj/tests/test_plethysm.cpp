#include <cliffalg/plethysm.hpp>
#include <cliffalg/random.hpp>

#include <doctest.h>

using namespace cliffalg;

namespace {

Weight W3(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

bool reflection_stable(const RootSystemData& R, const WeightMultiset& W) {
  for (int i = 0; i < R.rank(); ++i)
    if (W.map([&](const Weight& w) { return R.reflect(w, i); }) != W) return false;
  return true;
}

// Dominant weight with small random Dynkin labels.
Weight random_dominant(const RootSystemData& R, Rng& rng, int max_label) {
  std::vector<Rational> labels(R.rank());
  for (auto& x : labels) x = rng.integer(0, max_label);
  return R.from_dynkin_labels(labels);
}

}  // namespace

TEST_CASE("positive root counts and rho") {
  const std::vector<std::pair<std::string, std::size_t>> counts{
      {"G2", 6}, {"F4", 24}, {"C3", 9}, {"B2", 4}, {"B4", 16}, {"D4", 12}, {"D7", 42}, {"C2", 4}};
  for (const auto& [label, n] : counts) {
    const auto R = parse_root_system(label);
    CHECK_MESSAGE(R.positive_roots().size() == n, label);
    for (int i = 0; i < R.rank(); ++i) CHECK(R.pairing(R.rho(), i) == 1);
    for (int i = 0; i < R.rank(); ++i)
      for (int j = 0; j < R.rank(); ++j) CHECK(R.pairing(R.fundamental_weights()[i], j) == (i == j ? 1 : 0));
  }
  CHECK_THROWS_AS(parse_root_system("E8"), ParseError);
}

TEST_CASE("G2 realization") {
  const RootSystemData R(RootType::G2, 2);
  // Roots lie in the plane x1 + x2 + x3 = 0.
  for (const auto& a : R.positive_roots()) CHECK(a[0] + a[1] + a[2] == 0);
  CHECK(R.rho() == W3(-1, -2, 3));
  CHECK(R.highest_root() == W3(-1, -1, 2));
  CHECK(R.cartan_matrix()(0, 1) == -1);
  CHECK(R.cartan_matrix()(1, 0) == -3);
}

TEST_CASE("weyl_dim") {
  for (const char* label : {"G2", "C3", "B3", "D5", "F4"}) {
    const auto R = parse_root_system(label);
    CHECK(weyl_dim(R, Weight(R.ambient_dim())) == 1);
    CHECK(weyl_dim(R, R.rho()) == Integer(1) << R.positive_roots().size());
  }
  CHECK(weyl_dim(RootSystemData(RootType::G2, 2), RootSystemData(RootType::G2, 2).rho()) == 64);
  CHECK(weyl_dim(RootSystemData(RootType::C, 3), RootSystemData(RootType::C, 3).rho()) == 512);
  CHECK(weyl_dim(RootSystemData(RootType::F4, 4), RootSystemData(RootType::F4, 4).rho()) == Integer(1) << 24);

  const RootSystemData F4(RootType::F4, 4);
  std::vector<long> dims;
  for (const auto& w : F4.fundamental_weights()) dims.push_back(weyl_dim(F4, w).get_si());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<long>{26, 52, 273, 1274});

  const RootSystemData C3(RootType::C, 3);
  std::vector<long> cdims;
  for (const auto& w : C3.fundamental_weights()) cdims.push_back(weyl_dim(C3, w).get_si());
  std::sort(cdims.begin(), cdims.end());
  CHECK(cdims == std::vector<long>{6, 14, 14});

  CHECK_THROWS_AS(weyl_dim(F4, negate(F4.rho())), PreconditionError);
}

TEST_CASE("irrep_weights") {
  const RootSystemData G2(RootType::G2, 2);
  const auto adj = irrep_weights(G2, G2.highest_root());
  CHECK(adj.total() == 14);
  CHECK(adj.multiplicity(W3(0, 0, 0)) == 2);
  for (const auto& a : G2.positive_roots()) {
    CHECK(adj.multiplicity(a) == 1);
    CHECK(adj.multiplicity(negate(a)) == 1);
  }
  CHECK(adj.distinct() == 13);

  const auto triv = irrep_weights(G2, W3(0, 0, 0));
  CHECK(triv.total() == 1);
  CHECK(triv.multiplicity(W3(0, 0, 0)) == 1);

  const RootSystemData F4(RootType::F4, 4);
  for (const auto& w : F4.fundamental_weights())
    if (weyl_dim(F4, w) == 26) {
      const auto W = irrep_weights(F4, w);
      CHECK(W.total() == 26);
      CHECK(W.multiplicity(Weight(4)) == 2);
      CHECK(reflection_stable(F4, W));
    }
}

TEST_CASE("irrep_weights: totals and Weyl invariance on random highest weights") {
  Rng rng(11);
  for (const char* label : {"G2", "C3", "B3", "D4", "F4"}) {
    const auto R = parse_root_system(label);
    for (int t = 0; t < 6; ++t) {
      const Weight lambda = random_dominant(R, rng, R.type() == RootType::F4 ? 1 : 2);
      const auto W = irrep_weights(R, lambda);
      CHECK_MESSAGE(W.total() == weyl_dim(R, lambda).get_si(), label);
      CHECK(reflection_stable(R, W));
    }
  }
}

TEST_CASE("orthogonality of fundamentals") {
  const RootSystemData C3(RootType::C, 3);
  CHECK_FALSE(is_orthogonal(C3, C3.fundamental_weights()[0]));
  CHECK(is_orthogonal(C3, C3.fundamental_weights()[1]));
  CHECK_FALSE(is_orthogonal(C3, C3.fundamental_weights()[2]));
  const RootSystemData G2(RootType::G2, 2);
  CHECK(is_orthogonal(G2, G2.highest_root()));
}

TEST_CASE("halfspin_weights") {
  CHECK(halfspin_weights(7, +1).total() == 64);
  CHECK(halfspin_weights(13, +1).total() == 4096);
  const auto s1 = halfspin_weights(1, +1);
  CHECK(s1.total() == 1);
  CHECK(s1.multiplicity({Rational(1, 2)}) == 1);
  for (int l = 1; l <= 6; ++l) {
    const auto p = halfspin_weights(l, +1), m = halfspin_weights(l, -1);
    CHECK(p.total() == 1 << (l - 1));
    CHECK(m.total() == 1 << (l - 1));
    // The union is negation-closed; for even l so is each half.
    WeightMultiset all = p;
    for (const auto& [w, k] : m.counts()) all.add(w, k);
    CHECK(all.map(negate) == all);
    if (l % 2 == 0) {
      CHECK(p.map(negate) == p);
      CHECK(m.map(negate) == m);
    } else {
      CHECK(p.map(negate) == m);
    }
  }
}

TEST_CASE("restrict_weights") {
  EmbeddingData E;
  E.weights.assign(6, W3(0, 0, 0));
  E.representatives.assign(3, W3(0, 0, 0));
  const auto r = restrict_weights(halfspin_weights(3, +1), E);
  CHECK(r.total() == 4);
  CHECK(r.multiplicity(W3(0, 0, 0)) == 4);
  CHECK_THROWS_AS(restrict_weights(halfspin_weights(4, +1), E), DimensionMismatch);
  E.weights.pop_back();
  CHECK_THROWS_AS(restrict_weights(halfspin_weights(3, +1), E), DimensionMismatch);
}

TEST_CASE("identify_irreducible") {
  const RootSystemData G2(RootType::G2, 2);
  const auto d = identify_irreducible(irrep_weights(G2, G2.rho()), G2);
  REQUIRE(d.irreducible());
  CHECK(d.constituents[0].highest_weight == G2.rho());
  CHECK(d.constituents[0].dim == 64);

  WeightMultiset two;
  two.add(W3(0, 0, 0), 2);
  const auto t = identify_irreducible(two, G2);
  CHECK_FALSE(t.irreducible());
  REQUIRE(t.constituents.size() == 1);
  CHECK(t.constituents[0].multiplicity == 2);

  WeightMultiset bad;
  bad.add(G2.highest_root());
  CHECK_THROWS_AS(identify_irreducible(bad, G2), NotACharacter);
}

TEST_CASE("identify_irreducible: peel-off round trip and sums") {
  Rng rng(5);
  for (const char* label : {"G2", "C3", "B3", "D4"}) {
    const auto R = parse_root_system(label);
    for (int t = 0; t < 20; ++t) {
      const Weight lambda = random_dominant(R, rng, 2);
      const auto d = identify_irreducible(irrep_weights(R, lambda), R);
      REQUIRE(d.irreducible());
      CHECK(d.constituents[0].highest_weight == lambda);
    }
  }
  // A sum of two distinct irreducibles comes apart.
  const RootSystemData C3(RootType::C, 3);
  WeightMultiset sum = irrep_weights(C3, C3.fundamental_weights()[0]);
  const WeightMultiset third = irrep_weights(C3, C3.fundamental_weights()[2]);
  for (const auto& [w, k] : third.counts()) sum.add(w, k);
  const auto d = identify_irreducible(sum, C3);
  REQUIRE(d.constituents.size() == 2);
  CHECK(d.constituents[0].highest_weight == C3.fundamental_weights()[2]);
  CHECK(d.constituents[1].highest_weight == C3.fundamental_weights()[0]);
}

TEST_CASE("G2 embedding and restriction") {
  const RootSystemData G2(RootType::G2, 2);
  const auto E = make_embedding(G2, irrep_weights(G2, G2.highest_root()));
  CHECK(E.l() == 7);
  CHECK(E.weights.size() == 14);
  const auto r = restrict_weights(halfspin_weights(7, +1), E);
  CHECK(r.total() == 64);
  Weight top = r.counts().begin()->first;
  for (const auto& [w, k] : r.counts())
    if (G2.is_dominant(w) && G2.height(w) > G2.height(top)) top = w;
  CHECK(top == G2.rho());

  // Changing representatives moves the restriction by a Weyl element at most.
  for (int i = 0; i < E.l(); ++i) {
    const auto d = identify_irreducible(restrict_weights(halfspin_weights(7, +1), E.flipped(i)), G2);
    REQUIRE(d.irreducible());
    CHECK(d.constituents[0].highest_weight == G2.rho());
  }
}

TEST_CASE("verify_plethysm") {
  SUBCASE("G2") {
    const auto rep = verify_plethysm(PlethysmCase::G2);
    CHECK(rep.l == 7);
    CHECK(rep.defining_dim == 14);
    CHECK(rep.halfspin_agree);
    REQUIRE(rep.plus.irreducible());
    CHECK(rep.plus.constituents[0].highest_weight == rep.rho);
    CHECK(rep.plus.constituents[0].dim == 64);
  }
  SUBCASE("C3") {
    const auto rep = verify_plethysm(PlethysmCase::C3);
    CHECK(rep.l == 7);
    CHECK(rep.defining_dim == 14);
    REQUIRE(rep.plus.irreducible());
    CHECK(rep.plus.constituents[0].dim == 64);
    CHECK(rep.plus.constituents[0].dynkin_labels == std::vector<Rational>{1, 1, 0});
    CHECK(rep.halfspin_agree);
  }
  SUBCASE("F4") {
    const auto rep = verify_plethysm(PlethysmCase::F4);
    CHECK(rep.l == 13);
    CHECK(rep.defining_dim == 26);
    REQUIRE(rep.plus.irreducible());
    CHECK(rep.plus.constituents[0].dim == 4096);
    CHECK(rep.plus.constituents[0].dynkin_labels == std::vector<Rational>{0, 0, 1, 1});
    CHECK(rep.halfspin_agree);
  }
  CHECK(parse_plethysm_case("G2") == PlethysmCase::G2);
  CHECK_THROWS_AS(parse_plethysm_case("e8"), ParseError);
}
