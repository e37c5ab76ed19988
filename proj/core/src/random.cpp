#include <cliffalg/random.hpp>

namespace cliffalg {

SpaceQ random_space(Rng& rng, int m, long num_bound, long den_bound) {
  SquareMatrix<Rational> g(m, std::vector<Rational>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      g[i][j] = rng.rational(num_bound, den_bound);
      g[j][i] = g[i][j];
    }
  return SpaceQ(m, std::move(g));
}

Matrix<Rational> random_invertible(Rng& rng, int n, long bound) {
  for (;;) {
    Matrix<Rational> P(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) P(i, j) = Rational(rng.integer(-bound, bound));
    if (determinant(P) != 0) return P;
  }
}

SpaceQ random_space_with_corank(Rng& rng, int m, int corank) {
  if (corank < 0 || corank > m) throw PreconditionError("corank must lie in [0, m]");
  const Matrix<Rational> P = random_invertible(rng, m);
  Matrix<Rational> D(m, m);
  for (int i = 0; i < m - corank; ++i) D(i, i) = rng.nonzero_rational(3, 2);
  const Matrix<Rational> Q = P.transpose() * D * P;
  return SpaceQ(m, Q.to_rows());
}

MultivectorQ random_multivector(Rng& rng, int m, int terms, long num_bound, long den_bound) {
  MultivectorQ x;
  const auto span = static_cast<long>((Blade{1} << m) - 1);
  for (int t = 0; t < terms; ++t)
    x.add_term(static_cast<Blade>(rng.integer(0, span)), rng.rational(num_bound, den_bound));
  return x;
}

MultivectorQ random_vector(Rng& rng, int m, long num_bound) {
  std::vector<Rational> c(m);
  for (auto& v : c) v = Rational(rng.integer(-num_bound, num_bound));
  return MultivectorQ::vector(c);
}

}  // namespace cliffalg
