#include <cliffalg/lie_structure.hpp>
#include <cliffalg/local_models.hpp>
#include <cliffalg/random.hpp>

#include <doctest.h>

using namespace cliffalg;

namespace {

MatrixQ M(std::vector<std::vector<Rational>> rows) { return MatrixQ::from_rows(rows); }

MatrixQ diag(std::vector<Rational> d) {
  MatrixQ m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

const MatrixQ E12 = M({{0, 1}, {0, 0}});
const MatrixQ E21 = M({{0, 0}, {1, 0}});

MatrixQ random_matrix(Rng& rng, int n, long bound = 2) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.integer(-bound, bound);
  return m;
}

MatrixTuple random_tuple(Rng& rng, int g, int n) {
  std::vector<MatrixQ> X;
  for (int k = 0; k < g; ++k) X.push_back(random_matrix(rng, n));
  return MatrixTuple(n, X);
}

// Oracle: dimension of the span of every word of length <= n^2, enumerated directly.
int brute_word_span(const MatrixTuple& T) {
  std::vector<MatrixQ> layer{MatrixQ::identity(T.n)}, all = layer;
  for (int len = 1; len <= T.n * T.n; ++len) {
    std::vector<MatrixQ> next;
    for (const auto& w : layer)
      for (const auto& x : T.X) next.push_back(w * x);
    layer = next;
    all.insert(all.end(), next.begin(), next.end());
    if (all.size() > 4000) break;
  }
  MatrixQ rows(static_cast<int>(all.size()), T.n * T.n);
  for (std::size_t k = 0; k < all.size(); ++k)
    for (int i = 0; i < T.n; ++i)
      for (int j = 0; j < T.n; ++j) rows(static_cast<int>(k), i * T.n + j) = all[k](i, j);
  return rank(rows);
}

}  // namespace

TEST_CASE("generates_full_algebra") {
  CHECK(generates_full_algebra(MatrixTuple(2, {E12, E21})));
  CHECK_FALSE(generates_full_algebra(MatrixTuple(2, {MatrixQ::identity(2), MatrixQ::identity(2)})));
  CHECK(word_span(MatrixTuple(2, {MatrixQ::identity(2), MatrixQ::identity(2)})).dim == 1);
  CHECK_FALSE(generates_full_algebra(MatrixTuple(2, {diag({1, 2}), diag({3, 4})})));
  CHECK(word_span(MatrixTuple(2, {diag({1, 2}), diag({3, 4})})).dim == 2);
  CHECK_THROWS_AS(MatrixTuple(2, {MatrixQ(3, 3)}), DimensionMismatch);
}

TEST_CASE("word span matches enumeration and stabilizes within n^2 rounds") {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng.integer(0, 2));
    MatrixTuple T = random_tuple(rng, 2, n);
    if (rng.coin()) T.X[1] = T.X[0] * T.X[0];  // often not generating
    const auto ws = word_span(T);
    CHECK(ws.dim == brute_word_span(T));
    CHECK(ws.rounds <= n * n);
  }
}

TEST_CASE("is_cyclic_vector") {
  const MatrixTuple T(2, {E12, E21});
  CHECK(is_cyclic_vector(T, {1, 0}));
  CHECK_FALSE(is_cyclic_vector(T, {0, 0}));
  CHECK_FALSE(is_cyclic_vector(MatrixTuple(2, {diag({1, 2}), diag({3, 4})}), {1, 0}));
  CHECK_THROWS_AS(is_cyclic_vector(T, {1, 0, 0}), DimensionMismatch);

  // When the tuple generates M_n every nonzero vector is cyclic.
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    const MatrixTuple R = random_tuple(rng, 2, 3);
    if (!generates_full_algebra(R)) continue;
    std::vector<Rational> v(3);
    for (auto& x : v) x = rng.integer(-2, 2);
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_zero(x); })) continue;
    CHECK(is_cyclic_vector(R, v));
  }
}

TEST_CASE("trace fingerprint and S-equivalence") {
  const auto fp = trace_fingerprint(MatrixTuple(2, {E12, E21}), 2);
  REQUIRE(fp.traces.size() == 7);
  CHECK(fp.traces[0].first.empty());
  CHECK(fp.traces[0].second == 2);
  CHECK(fp.traces[1].first == std::vector<int>{1});
  CHECK(fp.traces[3].first == std::vector<int>{1, 1});
  CHECK(fp.traces[4].first == std::vector<int>{1, 2});
  CHECK(fp.traces[4].second == 1);

  CHECK(s_equivalent(MatrixTuple(2, {diag({1, 2}), diag({0, 0})}), MatrixTuple(2, {diag({2, 1}), diag({0, 0})})));
  CHECK(s_equivalent(MatrixTuple(2, {E12, MatrixQ(2, 2)}), zero_tuple(2, 2)));
  CHECK_FALSE(s_equivalent(MatrixTuple(2, {diag({1, 2}), diag({0, 0})}), MatrixTuple(2, {diag({1, 3}), diag({0, 0})})));
  CHECK_THROWS_AS(s_equivalent(zero_tuple(2, 2), zero_tuple(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(s_equivalent(zero_tuple(2, 2), zero_tuple(3, 2)), DimensionMismatch);
}

TEST_CASE("S-equivalence is conjugation invariant") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng.integer(0, 2));
    const MatrixTuple T = random_tuple(rng, 2, n);
    const MatrixQ P = random_invertible(rng, n);
    CHECK(s_equivalent(T, T.conjugated(P)));
  }
}

TEST_CASE("a generating tuple is separated from block-diagonal tuples") {
  // Upper-triangular tuple with the same diagonal blocks semisimplifies to a
  // direct sum, so it is S-equivalent to it; a simple tuple is not.
  Rng rng(4);
  int tested = 0;
  for (int t = 0; t < 40 && tested < 10; ++t) {
    const MatrixTuple S = random_tuple(rng, 2, 3);
    if (!generates_full_algebra(S)) continue;
    const MatrixTuple A = random_tuple(rng, 2, 1), B = random_tuple(rng, 2, 2);
    const MatrixTuple D = direct_sum(A, B);
    CHECK_FALSE(s_equivalent(S, D));
    MatrixTuple U = D;
    for (auto& x : U.X) x(0, 1) += rng.integer(1, 3);
    CHECK(s_equivalent(U, D));
    CHECK_FALSE(generates_full_algebra(D));
    ++tested;
  }
  CHECK(tested > 0);
}

TEST_CASE("centralizer_dim") {
  const auto h = sl2_basis();
  CHECK(centralizer_dim(MatrixTuple(2, {E12, E21}), h) == 0);
  CHECK(centralizer_dim(zero_tuple(2, 2), h) == 3);
  CHECK(centralizer_dim(MatrixTuple(2, {diag({1, -1}), MatrixQ(2, 2)}), h) == 1);
  CHECK_THROWS_AS(centralizer_dim(MatrixTuple(2, {MatrixQ::identity(2)}), h), NotInSpan);
  // Dependent spanning lists give the same answer.
  auto h2 = h;
  h2.push_back(h[1] + h[2]);
  CHECK(centralizer_dim(MatrixTuple(2, {diag({1, -1})}), h2) == 1);
}

TEST_CASE("spin image") {
  const WittDecomposition B1(1, true);
  // abar_12 = n_1 p_1 mod scalars, i.e. h_1.
  const MatrixQ h = spin_image(B1, {1, 0, 0});
  CHECK(h == diag({Rational(-1, 2), Rational(1, 2)}));

  const auto zero = spin_image_tuple({{0, 0, 0}, {0, 0, 0}}, B1);
  CHECK(zero.n == 2);
  CHECK(zero == zero_tuple(2, 2));
  CHECK_THROWS_AS(spin_image(B1, {1, 0}), NotInSpan);

  // abar_13 and abar_23 generate so(3); their images generate M_2.
  const auto pair = spin_image_tuple({{0, 1, 0}, {0, 0, 1}}, B1);
  CHECK(generates_full_algebra(pair));
  CHECK(centralizer_dim(pair, sl2_basis()) == 0);
}

TEST_CASE("spin image respects brackets") {
  Rng rng(17);
  for (const auto& [l, odd] : std::vector<std::pair<int, bool>>{{1, true}, {2, false}, {2, true}, {3, false}}) {
    const WittDecomposition W(l, odd);
    const auto L = structure_constants(W.space());
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> x(L.dim()), y(L.dim());
      for (auto& c : x) c = rng.integer(-2, 2);
      for (auto& c : y) c = rng.integer(-2, 2);
      CHECK(spin_image(W, L.bracket(x, y)) == commutator(spin_image(W, x), spin_image(W, y)));
    }
    // Images stay traceless and the conjugation invariants of the image are well defined.
    std::vector<Rational> x(L.dim());
    x[0] = 1;
    CHECK(is_zero(spin_image(W, x).trace()));
  }
}
TEST_CASE("sl_n basis and centralizer basis") {
  CHECK(sl_basis(3).size() == 8);
  CHECK(centralizer_dim(zero_tuple(1, 3), sl_basis(3)) == 8);
  const auto Y = centralizer_basis(MatrixTuple(2, {diag({1, -1})}), sl2_basis());
  REQUIRE(Y.size() == 1);
  CHECK(commutator(Y[0], diag({1, -1})).is_zero());
  CHECK_FALSE(Y[0].is_zero());
}
