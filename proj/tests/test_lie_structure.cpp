#include <doctest.h>

#include <cliffalg/lie_structure.hpp>
#include <cliffalg/random.hpp>
#include <cliffalg_selftest/oracles.hpp>

using namespace cliffalg;

namespace {

SpaceQ single_off_diagonal(int m, int i, int j, const Rational& b) {
  SquareMatrix<Rational> g(m, std::vector<Rational>(m));
  g[i - 1][j - 1] = b / 2;
  g[j - 1][i - 1] = b / 2;
  return SpaceQ(m, g);
}

std::vector<Rational> unit(int n, int k) {
  std::vector<Rational> v(n);
  v[k] = 1;
  return v;
}

using FamilyQ = QuadraticSpace<RationalFunction>;

}  // namespace

TEST_CASE("even Lie algebra dimension is flat") {
  CHECK(build_even_lie(SpaceQ::identity(3)).dim() == 4);
  CHECK(build_even_lie(SpaceQ::zero(3)).dim() == 4);
  Rng rng(5);
  for (int m = 1; m <= 6; ++m)
    for (int corank = 0; corank <= m; ++corank)
      CHECK(build_even_lie(random_space_with_corank(rng, m, corank)).dim() == 1 + m * (m - 1) / 2);
}

TEST_CASE("bracket examples") {
  SUBCASE("identity form, m = 3") {
    const auto L = structure_constants(SpaceQ::identity(3));
    const int a12 = L.index_of(1, 2), a23 = L.index_of(2, 3), a13 = L.index_of(1, 3);
    CHECK(L.bracket(unit(3, a12), unit(3, a23)) == std::vector<Rational>{0, 2, 0});
    CHECK(a13 == 1);
  }
  SUBCASE("zero form") {
    for (int m : {3, 4}) {
      const auto L = structure_constants(SpaceQ::zero(m));
      for (const auto& c : L.constants) CHECK(c == 0);
    }
  }
  SUBCASE("b(1,4) = 1 only") {
    const SpaceQ V = single_off_diagonal(4, 1, 4, 1);
    const auto L = structure_constants(V);
    const auto br = L.bracket(unit(6, L.index_of(1, 2)), unit(6, L.index_of(3, 4)));
    // [e1e2, e3e4] = b(1,4) e2e3
    CHECK(br[L.index_of(2, 3)] == 1);
    CHECK(br[L.index_of(1, 4)] == 0);
    CHECK(br == oracle::closed_form_bracket(V, 1, 2, 3, 4));
    // Putting 2 b(1,4) on abar_14 does not match the product.
    CHECK(oracle::naive_four_index_bracket(V, 1, 2, 3, 4) != br);
  }
}

TEST_CASE("constants match the closed-form brackets") {
  Rng rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = static_cast<int>(rng.integer(2, 6));
    const SpaceQ V = random_space(rng, m);
    const auto L = structure_constants(V);
    const int n = L.dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto [i, j] = L.labels[a];
        const auto [k, l] = L.labels[b];
        CHECK(L.bracket(unit(n, a), unit(n, b)) == oracle::closed_form_bracket(V, i, j, k, l));
      }
  }
}

TEST_CASE("Jacobi identity") {
  Rng rng(8);
  for (int m = 2; m <= 7; ++m) CHECK_FALSE(lie_defect(structure_constants(random_space(rng, m))).has_value());
  CHECK_FALSE(lie_defect(structure_constants(random_space_with_corank(rng, 5, 2))).has_value());
}

TEST_CASE("form reconstruction round trip") {
  CHECK(reconstruct_form(structure_constants(SpaceQ::identity(3))) == SpaceQ::identity(3));
  CHECK(reconstruct_form(structure_constants(SpaceQ::zero(4))) == SpaceQ::zero(4));
  Rng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const SpaceQ V = random_space(rng, 5);
    CHECK(reconstruct_form(structure_constants(V)) == V);
  }
  for (int m = 3; m <= 9; ++m) {
    const SpaceQ V = random_space_with_corank(rng, m, m / 3);
    CHECK(reconstruct_form(structure_constants(V)) == V);
  }
}

TEST_CASE("reconstruction rejects bad tables") {
  auto L = structure_constants(SpaceQ::identity(3));
  L.at(0, 1, 2) += 1;
  CHECK_THROWS_AS(reconstruct_form(L), InconsistentConstants);
  CHECK_THROWS_AS(reconstruct_form(structure_constants(SpaceQ::identity(2))), PreconditionError);
  L.constants.pop_back();
  CHECK_THROWS_AS(reconstruct_form(L), DimensionMismatch);
}

TEST_CASE("theta tensor") {
  const auto T = theta_tensor(SpaceQ::identity(3));
  CHECK(T.dim == 4);
  CHECK(T.identity == 0);
  CHECK_FALSE(unitality_defect(T).has_value());
  CHECK_FALSE(associativity_defect(T).has_value());
  CHECK(reconstruct_from_tensor(T, 3) == SpaceQ::identity(3));

  Rng rng(3);
  const SpaceQ A = random_space(rng, 3), B = random_space(rng, 3);
  REQUIRE_FALSE(A == B);
  CHECK_FALSE(theta_tensor(A) == theta_tensor(B));
  CHECK(reconstruct_from_tensor(theta_tensor(A), 3) == A);

  const Polynomial t = Polynomial::t();
  const auto P = theta_tensor(QuadraticSpace<Polynomial>::diagonal({Polynomial(1), Polynomial(1), t}));
  for (const auto& [idx, c] : P.c) CHECK(c.degree() <= 1);
  CHECK(specialize(P, Rational(4)) == theta_tensor(SpaceQ::diagonal({1, 1, 4})));
}

TEST_CASE("integrality witness") {
  const Polynomial t = Polynomial::t();
  const RationalFunction T(t);
  CHECK(integrality_witness(FamilyQ::diagonal({1, 1, T})));
  CHECK_FALSE(integrality_witness(FamilyQ::diagonal({1, 1, RationalFunction(1) / T})));
  const RationalFunction r(t, Polynomial(1) + t);
  SquareMatrix<RationalFunction> g(3, std::vector<RationalFunction>(3));
  g[0][0] = 1;
  g[0][2] = g[2][0] = r;
  g[1][1] = r;
  CHECK(integrality_witness(FamilyQ(3, g)));

  Rng rng(77);
  int singular = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(rng.integer(3, 5));
    SquareMatrix<RationalFunction> q(m, std::vector<RationalFunction>(m));
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        const Polynomial num({rng.rational(2, 2), rng.rational(2, 2)});
        const Polynomial den = rng.integer(0, 9) == 0 ? t : Polynomial({Rational(1), rng.rational(2, 1)});
        q[i][j] = q[j][i] = RationalFunction(num, den);
      }
    const FamilyQ F(m, q);
    const IntegralityReport rep = integrality_report(F);
    CHECK(rep.agree());
    if (!rep.form_regular) ++singular;
  }
  CHECK(singular > 0);
}
