#include <doctest.h>

#include <cliffalg/degeneration.hpp>
#include <cliffalg/random.hpp>
#include <cliffalg_selftest/oracles.hpp>

using namespace cliffalg;

namespace {

using PolySpace = QuadraticSpace<Polynomial>;

PolySpace ones_then_t(int m) {
  std::vector<Polynomial> d(m, Polynomial(1));
  d.back() = Polynomial::t();
  return PolySpace::diagonal(d);
}

}  // namespace

TEST_CASE("family tensor") {
  const auto T = family_tensor(ones_then_t(3));
  for (const auto& [idx, c] : T.c) CHECK(c.degree() <= 1);
  const auto C = family_tensor(PolySpace::identity(3));
  for (const auto& [idx, c] : C.c) CHECK(c.is_constant());
  const PolySpace F = PolySpace::diagonal({Polynomial(1), Polynomial::t(), Polynomial(2)});
  CHECK(specialize(family_tensor(F), Rational(5)) == theta_tensor(SpaceQ::diagonal({1, 5, 2})));
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    SquareMatrix<Polynomial> g(3, std::vector<Polynomial>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) g[i][j] = g[j][i] = Polynomial({rng.rational(2, 2), rng.rational(2, 2)});
    const PolySpace P(3, g);
    const Rational c = rng.rational(5, 3);
    CHECK(specialize(family_tensor(P), c) == theta_tensor(specialize(P, c)));
  }
  const auto pole = QuadraticFamily::diagonal({1, 1, RationalFunction(1) / RationalFunction(Polynomial::t())});
  CHECK_THROWS_AS(family_tensor(pole), PoleError);
}

TEST_CASE("radical examples") {
  CHECK(jacobson_radical(theta_tensor(SpaceQ::identity(3))).dim() == 0);
  CHECK(jacobson_radical(matrix_algebra_tensor(2)).dim() == 0);
  CHECK(jacobson_radical(matrix_algebra_tensor(3)).dim() == 0);
  const auto r = jacobson_radical(theta_tensor(SpaceQ::diagonal({1, 1, 0})));
  CHECK(r.dim() == 2);
  CHECK(r.is_ideal);
  CHECK(r.is_nil);
  CHECK(r.nilpotency_index == 2);
  const auto ext = jacobson_radical(theta_tensor(SpaceQ::zero(3)));
  CHECK(ext.dim() == 3);
  CHECK(ext.is_nil);
  AlgebraTensor<Rational> bad = matrix_algebra_tensor(2);
  bad.identity = 1;
  CHECK_THROWS_AS(jacobson_radical(bad), PreconditionError);
}

TEST_CASE("matrix algebra tensor is associative and unital") {
  const auto T = matrix_algebra_tensor(2);
  CHECK_FALSE(unitality_defect(T).has_value());
  CHECK_FALSE(associativity_defect(T).has_value());
}

TEST_CASE("semisimple iff nondegenerate") {
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = trial % 2 ? 3 : 5;
    const SpaceQ V = trial % 3 == 0 ? random_space_with_corank(rng, m, 1) : random_space(rng, m);
    const auto T = theta_tensor(V);
    const auto r = jacobson_radical(T);
    CHECK((r.dim() == 0) == (degeneracy_rank(V) == m));
    CHECK(r.dim() == T.dim - oracle::trace_form_rank(T));
    CHECK(r.is_ideal);
    CHECK(r.is_nil);
  }
}

TEST_CASE("certify specialization") {
  const auto w3 = certify_specialization(ones_then_t(3));
  CHECK(w3.valid());
  CHECK(w3.det == RationalFunction(Polynomial({0, 8})));
  CHECK(w3.radical.dim() == 2);
  const auto triv = certify_specialization(PolySpace::identity(3));
  CHECK(triv.valid());
  CHECK(triv.radical.dim() == 0);
  const Polynomial t = Polynomial::t();
  const auto ttt = certify_specialization(PolySpace::diagonal({t, t, t}));
  CHECK(ttt.valid());
  CHECK(ttt.radical.dim() == 3);
  const auto w5 = certify_specialization(ones_then_t(5));
  CHECK(w5.valid());
  CHECK(w5.radical.dim() == 8);
  CHECK_THROWS_AS(certify_specialization(PolySpace::diagonal({1, 1, 0})), DegenerateFamily);
  CHECK_THROWS_AS(certify_specialization(PolySpace::identity(4)), PreconditionError);
}
