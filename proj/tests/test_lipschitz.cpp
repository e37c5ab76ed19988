#include <doctest.h>

#include <cliffalg/lipschitz.hpp>
#include <cliffalg/random.hpp>

using namespace cliffalg;

namespace {

MultivectorQ E(std::initializer_list<int> idx, Rational c = 1) { return MultivectorQ::blade(blade_of(idx), c); }

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Products of one to three generators of the form a (vector) or lambda + a b.
MultivectorQ lipschitz_sample(Rng& rng, const SpaceQ& V) {
  const int m = V.dim();
  MultivectorQ x = MultivectorQ::one();
  const int factors = static_cast<int>(rng.integer(1, 3));
  for (int f = 0; f < factors; ++f) {
    MultivectorQ y;
    if (rng.coin()) {
      y = random_vector(rng, m);
    } else {
      y = MultivectorQ::scalar(rng.rational(3, 2)) +
          geometric_product(random_vector(rng, m), random_vector(rng, m), V);
    }
    x = geometric_product(x, y, V);
  }
  return x;
}

}  // namespace

TEST_CASE("doubled algebra presentations") {
  Rng rng(4);
  for (int m = 1; m <= 3; ++m) {
    const SpaceQ V = random_space(rng, m);
    const DoubledAlgebra D(V);
    const SpaceQ& S = D.standard_space();
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= m; ++j) {
        const auto di = D.delta(i), dj = D.delta(j), pi = D.delta_prime(i), pj = D.delta_prime(j);
        CHECK((geometric_product(di, dj, S) + geometric_product(dj, di, S)).is_zero());
        CHECK((geometric_product(pi, pj, S) + geometric_product(pj, pi, S)).is_zero());
        CHECK(D.to_split(di) == MultivectorQ::generator(i));
        CHECK(D.to_split(pi) == MultivectorQ::generator(m + i));
      }
    // Cl^0 spanned by delta_I delta'_J in standard coordinates has dimension C(2m, m).
    SparseSpan span;
    for (Blade b : D.cl0().basis) {
      MultivectorQ w = MultivectorQ::one();
      for (int idx : blade_indices(b)) w = geometric_product(w, idx <= m ? D.delta(idx) : D.delta_prime(idx - m), S);
      CHECK(D.in_cl0(w));
      SparseVector v(w.terms().begin(), w.terms().end());
      span.insert(v);
    }
    CHECK(span.dim() == binomial(2 * m, m));
    // ker D has the same dimension.
    const int N = 1 << (2 * m);
    Matrix<Rational> A(N, N);
    for (Blade b = 0; b < static_cast<Blade>(N); ++b) {
      const auto d = D.grading_derivation(MultivectorQ::blade(b));
      for (const auto& [r, c] : d.terms()) A(r, b) = c;
    }
    CHECK(static_cast<long>(kernel(A).size()) == binomial(2 * m, m));
  }
  for (int m = 1; m <= 6; ++m) CHECK(DoubledAlgebra(SpaceQ::identity(m)).cl0().dim() == binomial(2 * m, m));
}

TEST_CASE("grading derivation agrees with split coordinates") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(rng.integer(1, 3));
    const DoubledAlgebra D(random_space(rng, m));
    const auto x = random_multivector(rng, m, 2), y = random_multivector(rng, m, 2);
    const auto z = D.embed_pair(x, y);
    CHECK(D.in_cl0(z) == D.in_cl0_by_coordinates(z));
    const auto a = random_vector(rng, m);
    const auto w = D.embed_pair(a, reverse(a, D.base()));
    CHECK(D.in_cl0(w));
    CHECK(D.in_cl0_by_coordinates(w));
  }
}

TEST_CASE("embed_pair calibration") {
  const SpaceQ V = SpaceQ::diagonal({2, 3, 5});
  const DoubledAlgebra D(V);
  const auto one = MultivectorQ::one();
  CHECK(D.embed_pair(E({1}), one) == D.f(1));
  CHECK(D.embed_pair(one, E({1})) == D.g(1));
  CHECK(D.embed_pair(E({1}), E({1})) == MultivectorQ::blade(blade_of({1, 4})));
  Rng rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_vector(rng, 3);
    MultivectorQ image;
    for (const auto& [b, c] : a.terms()) image += c * D.delta(top_index(b));
    CHECK(D.embed_pair(a, one) + D.embed_pair(one, a) == image);
  }
}

TEST_CASE("Lipschitz membership examples") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = static_cast<int>(rng.integer(3, 5));
    const SpaceQ V = trial % 2 ? random_space(rng, m) : random_space_with_corank(rng, m, 1);
    const DoubledAlgebra D(V);
    const auto a = random_vector(rng, m), b = random_vector(rng, m);
    if (!a.is_zero()) CHECK(is_lipschitz(a, D));
    const auto lab = MultivectorQ::scalar(rng.rational(4, 3)) + geometric_product(a, b, V);
    if (!lab.is_zero()) CHECK(is_lipschitz(lab, D));
    CHECK(is_lipschitz(MultivectorQ::scalar(3) + E({1, 2}), D));
  }
  CHECK(is_lipschitz(E({1}), SpaceQ::identity(3)));
  CHECK(is_lipschitz(MultivectorQ::one(), SpaceQ::zero(2)));
  // e12 + 2 e34 is invertible for Q = I but its norm 5 - 4 e1234 is not scalar.
  const SpaceQ I4 = SpaceQ::identity(4);
  const auto x = E({1, 2}) + E({3, 4}, 2);
  CHECK_FALSE(is_lipschitz(x, I4));
  CHECK_FALSE(is_lipschitz(E({1}) + E({1, 2}), I4));
  CHECK_FALSE(is_lipschitz(MultivectorQ(), I4));
}

TEST_CASE("group and spin kernel") {
  const SpaceQ V = SpaceQ::diagonal({3, 1, 1});
  CHECK(is_spin_kernel(MultivectorQ::one(), V));
  CHECK(is_glip(E({1}), V));
  CHECK_FALSE(is_spin_kernel(E({1}), V));
  CHECK_FALSE(is_glip(MultivectorQ(), V));
  const auto v = classify_lipschitz(E({1}), V);
  CHECK(v.verdict == "group");
  REQUIRE(v.norm_scalar.has_value());
  CHECK(*v.norm_scalar == 3);
  CHECK(classify_lipschitz(MultivectorQ(), V).verdict == "none");
  // e2 e3 has norm e23 tau(e23) = e23 e32 = 1.
  CHECK(is_spin_kernel(E({2, 3}), V));
  // Isotropic vector in a degenerate form: Lipschitz but not invertible.
  CHECK(classify_lipschitz(E({3}), SpaceQ::diagonal({1, 1, 0})).verdict == "monoid");
}

TEST_CASE("monoid closure, tau stability and scalar norm") {
  Rng rng(55);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = static_cast<int>(rng.integer(2, 5));
    const SpaceQ V = trial % 3 == 0 ? random_space_with_corank(rng, m, 1) : random_space(rng, m);
    const DoubledAlgebra D(V);
    const auto x = lipschitz_sample(rng, V), y = lipschitz_sample(rng, V);
    if (x.is_zero() || y.is_zero()) continue;
    REQUIRE(is_lipschitz(x, D));
    CHECK(is_lipschitz(reverse(x, V), D));
    const auto xy = geometric_product(x, y, V);
    if (!xy.is_zero()) CHECK(is_lipschitz(xy, D));
    const auto n1 = geometric_product(x, reverse(x, V), V), n2 = geometric_product(reverse(x, V), x, V);
    CHECK(n1 == n2);
    CHECK(is_scalar(n1));
    ++checked;
  }
  CHECK(checked > 40);
}

TEST_CASE("infinitesimal Lipschitz elements") {
  const auto r3 = infinitesimal_lipschitz(SpaceQ::identity(3));
  CHECK(r3.equals_cl_plus_le2);
  CHECK(r3.spin_dim() == 3);
  const auto r0 = infinitesimal_lipschitz(SpaceQ::zero(4));
  CHECK(r0.equals_cl_plus_le2);
  CHECK(r0.spin_dim() == 6);
  for (const auto& X : r0.spin_basis) CHECK(X.coefficient(0) == 0);
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = static_cast<int>(rng.integer(1, 5));
    const auto rep = infinitesimal_lipschitz(random_space_with_corank(rng, m, static_cast<int>(rng.integer(0, m))));
    CHECK(rep.equals_cl_plus_le2);
    CHECK(rep.spin_dim() == m * (m - 1) / 2);
  }
}
