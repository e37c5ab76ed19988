#include <cliffalg/algebra_tensor.hpp>

namespace cliffalg {

AlgebraTensor<Rational> matrix_algebra_tensor(int n) {
  if (n < 1) throw PreconditionError("matrix algebra size must be positive");
  const int d = n * n;
  // Basis element k: k == 0 is the identity; otherwise E_ab with k = a*n + b.
  auto basis_matrix = [&](int k) {
    Matrix<Rational> M(n, n);
    if (k == 0) return Matrix<Rational>::identity(n);
    M(k / n, k % n) = 1;
    return M;
  };
  auto coordinates = [&](const Matrix<Rational>& M) {
    std::vector<Rational> x(d);
    x[0] = M(0, 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int k = a * n + b;
        if (k == 0) continue;
        x[k] = (a == b) ? Rational(M(a, b) - M(0, 0)) : M(a, b);
      }
    return x;
  };
  AlgebraTensor<Rational> T;
  T.dim = d;
  T.identity = 0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto x = coordinates(basis_matrix(i) * basis_matrix(j));
      for (int k = 0; k < d; ++k) T.add(i, j, k, x[k]);
    }
  return T;
}

}  // namespace cliffalg
