#include <cliffalg/spinor.hpp>

#include <bit>

namespace cliffalg {

namespace {

SpaceQ witt_space(int l, bool odd) {
  if (l < 1) throw PreconditionError("Witt index must be at least 1");
  const int m = odd ? 2 * l + 1 : 2 * l;
  if (m > kMaxGenerators) throw PreconditionError("Witt index too large");
  SquareMatrix<Rational> g(m, std::vector<Rational>(m));
  for (int i = 0; i < l; ++i) {
    g[i][l + i] = Rational(1, 2);
    g[l + i][i] = Rational(1, 2);
  }
  if (odd) g[2 * l][2 * l] = 1;
  return SpaceQ(m, std::move(g));
}

int sign_before(std::uint32_t omega, int i) {
  const std::uint32_t below = omega & ((std::uint32_t{1} << (i - 1)) - 1);
  return (std::popcount(below) & 1) ? -1 : 1;
}

/// rho(e_A) for every blade A on the m generators, built as rho(e_A') rho(e_top).
std::vector<Matrix<Rational>> all_blade_matrices(const WittDecomposition& W) {
  const int m = W.dim();
  const int n = 1 << W.rank();
  std::vector<Matrix<Rational>> gens;
  for (int k = 1; k <= m; ++k) gens.push_back(generator_matrix(W, k));
  std::vector<Matrix<Rational>> out(std::size_t{1} << m);
  out[0] = Matrix<Rational>::identity(n);
  for (Blade a = 1; a < (Blade{1} << m); ++a) {
    const int top = top_index(a);
    out[a] = out[a & ~generator_blade(top)] * gens[top - 1];
  }
  return out;
}

Matrix<Rational> combine(const std::vector<Matrix<Rational>>& blades, const MultivectorQ& x, int n) {
  Matrix<Rational> r(n, n);
  for (const auto& [b, c] : x.terms()) r += c * blades.at(b);
  return r;
}

}  // namespace

WittDecomposition::WittDecomposition(int l, bool odd) : l_(l), odd_(odd), space_(witt_space(l, odd)) {}

int WittDecomposition::number_of(const WittGenerator& g) const {
  switch (g.kind) {
    case WittGenerator::Kind::N:
    case WittGenerator::Kind::P:
      if (g.index < 1 || g.index > l_)
        throw IndexOutOfRange("Witt generator index " + std::to_string(g.index) + " outside [1, " +
                              std::to_string(l_) + "]");
      return g.kind == WittGenerator::Kind::N ? g.index : l_ + g.index;
    case WittGenerator::Kind::U:
      if (!odd_) throw PreconditionError("u exists only in the odd case");
      return 2 * l_ + 1;
  }
  throw PreconditionError("unknown generator");
}

WittGenerator WittDecomposition::generator(int k) const {
  space_.check_index(k);
  if (k <= l_) return {WittGenerator::Kind::N, k};
  if (k <= 2 * l_) return {WittGenerator::Kind::P, k - l_};
  return {WittGenerator::Kind::U, 0};
}

std::string WittDecomposition::name(int k) const {
  const WittGenerator g = generator(k);
  switch (g.kind) {
    case WittGenerator::Kind::N:
      return "n" + std::to_string(g.index);
    case WittGenerator::Kind::P:
      return "p" + std::to_string(g.index);
    default:
      return "u";
  }
}

Spinor clifford_action(const WittDecomposition& W, const WittGenerator& g, std::uint32_t omega) {
  (void)W.number_of(g);
  if (omega >> W.rank()) throw IndexOutOfRange("spinor basis element outside Lambda N");
  Spinor out;
  const std::uint32_t bit = std::uint32_t{1} << (g.index - 1);
  switch (g.kind) {
    case WittGenerator::Kind::N:
      if (!(omega & bit)) out[omega | bit] = sign_before(omega, g.index);
      break;
    case WittGenerator::Kind::P:
      if (omega & bit) out[omega & ~bit] = sign_before(omega, g.index);
      break;
    case WittGenerator::Kind::U:
      out[omega] = spinor_parity_odd(omega) ? -1 : 1;
      break;
  }
  return out;
}

Matrix<Rational> generator_matrix(const WittDecomposition& W, int k) {
  const int n = 1 << W.rank();
  const WittGenerator g = W.generator(k);
  Matrix<Rational> M(n, n);
  for (int col = 0; col < n; ++col)
    for (const auto& [row, v] : clifford_action(W, g, static_cast<std::uint32_t>(col))) M(row, col) = v;
  return M;
}

Matrix<Rational> action_matrix(const WittDecomposition& W, const MultivectorQ& x) {
  detail::check_fits(x, W.space());
  const int n = 1 << W.rank();
  Matrix<Rational> r(n, n);
  for (const auto& [b, c] : x.terms()) {
    Matrix<Rational> blade = Matrix<Rational>::identity(n);
    for (int i : blade_indices(b)) blade = blade * generator_matrix(W, i);
    r += c * blade;
  }
  return r;
}

IsomorphismReport even_algebra_isomorphism_check(const WittDecomposition& W) {
  IsomorphismReport rep;
  rep.rank = W.rank();
  rep.odd = W.odd();
  const int m = W.dim();
  const int n = 1 << W.rank();
  const SpaceQ& V = W.space();
  rep.source_dim = 1 << (m - 1);
  rep.target_dim = W.odd() ? n * n : 2 * (n / 2) * (n / 2);

  std::vector<Matrix<Rational>> gens;
  for (int k = 1; k <= m; ++k) gens.push_back(generator_matrix(W, k));
  const auto I = Matrix<Rational>::identity(n);
  rep.relations_hold = true;
  for (int a = 1; a <= m && rep.relations_hold; ++a)
    for (int b = a; b <= m; ++b) {
      const auto lhs = gens[a - 1] * gens[b - 1] + gens[b - 1] * gens[a - 1];
      if (!(lhs == V.b(a, b) * I)) {
        rep.relations_hold = false;
        rep.failure = W.name(a) + " " + W.name(b) + " + " + W.name(b) + " " + W.name(a) + " != b(" + W.name(a) +
                      ", " + W.name(b) + ") on S";
        break;
      }
    }
  if (!rep.relations_hold) return rep;

  // rho(e_k x) = rho(e_k) rho(x) for all generators k and basis blades x
  // implies multiplicativity by induction on word length.
  const auto blades = all_blade_matrices(W);
  rep.homomorphism_holds = true;
  for (int k = 1; k <= m && rep.homomorphism_holds; ++k)
    for (Blade b = 0; b < (Blade{1} << m); ++b) {
      const auto prod = geometric_product(MultivectorQ::generator(k), MultivectorQ::blade(b), V);
      if (!(combine(blades, prod, n) == gens[k - 1] * blades[b])) {
        rep.homomorphism_holds = false;
        rep.failure = "rho(" + W.name(k) + " * " + blade_name(b) + ") != rho(" + W.name(k) + ") rho(" +
                      blade_name(b) + ")";
        break;
      }
    }
  if (!rep.homomorphism_holds) return rep;

  rep.blocks_hold = true;
  if (!W.odd()) {
    for (Blade b = 0; b < (Blade{1} << m) && rep.blocks_hold; ++b)
      for (int r = 0; r < n && rep.blocks_hold; ++r)
        for (int c = 0; c < n; ++c) {
          if (is_zero(blades[b](r, c))) continue;
          const bool same = spinor_parity_odd(r) == spinor_parity_odd(c);
          if (same != is_even_blade(b)) {
            rep.blocks_hold = false;
            rep.failure = "rho(" + blade_name(b) + ") does not respect S+ + S-";
            break;
          }
        }
    if (!rep.blocks_hold) return rep;
  }

  SparseSpan image;
  for (Blade b : even_blades(m)) {
    SparseVector v;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!is_zero(blades[b](r, c))) v[static_cast<std::uint32_t>(r * n + c)] = blades[b](r, c);
    image.insert(v);
  }
  rep.image_rank = image.dim();
  if (rep.image_rank != rep.source_dim) rep.failure = "image rank " + std::to_string(rep.image_rank) + " < " +
                                                       std::to_string(rep.source_dim);
  return rep;
}

MultivectorQ cartan_element(const WittDecomposition& W, int i) {
  const auto n = MultivectorQ::generator(W.number_of({WittGenerator::Kind::N, i}));
  const auto p = MultivectorQ::generator(W.number_of({WittGenerator::Kind::P, i}));
  const auto& V = W.space();
  return Rational(1, 2) * (geometric_product(n, p, V) - geometric_product(p, n, V));
}

SpinorWeights spinor_module_weights(SpinType type, int l) {
  const WittDecomposition W(l, type == SpinType::B);
  const int n = 1 << l;
  std::vector<Matrix<Rational>> h;
  for (int i = 1; i <= l; ++i) {
    const MultivectorQ hi = cartan_element(W, i);
    if (!is_even(hi) || filtration_degree(hi) > 2)
      throw std::logic_error("Cartan element h_" + std::to_string(i) + " is not in L_q");
    h.push_back(action_matrix(W, hi));
  }
  SpinorWeights out;
  for (int omega = 0; omega < n; ++omega) {
    Weight w(l);
    for (int i = 0; i < l; ++i) {
      for (int r = 0; r < n; ++r)
        if (r != omega && !is_zero(h[i](r, omega)))
          throw std::logic_error("Cartan action is not diagonal on the subset basis");
      w[i] = h[i](omega, omega);
    }
    out.all.add(w);
    (spinor_parity_odd(omega) ? out.minus : out.plus).add(w);
  }
  return out;
}

WeightMultiset spin_weights(SpinType type, int l) { return spinor_module_weights(type, l).all; }

RestrictionReport restrict_even_to_odd(int l) {
  if (l < 2) throw PreconditionError("restriction needs l >= 2");
  RestrictionReport rep;
  rep.rank = l;
  const int k = l - 1;
  const int m = 2 * l;
  // M = M-bar + <v'> in coordinates (n'_1..n'_k, p'_1..p'_k, v, v') with
  // q(v) = 1 and q(v') = -1.
  Matrix<Rational> G(m, m);
  for (int i = 0; i < k; ++i) G(i, k + i) = G(k + i, i) = Rational(1, 2);
  G(2 * k, 2 * k) = 1;
  G(2 * k + 1, 2 * k + 1) = -1;
  // New basis (n'_1..n'_k, n_l, p'_1..p'_k, p_l) with n_l = (v + v')/2, p_l = (v - v')/2.
  Matrix<Rational> B(m, m);  // columns are the new basis vectors
  for (int i = 0; i < k; ++i) {
    B(i, i) = 1;
    B(k + i, l + i) = 1;
  }
  B(2 * k, k) = Rational(1, 2);
  B(2 * k + 1, k) = Rational(1, 2);
  B(2 * k, 2 * l - 1) = Rational(1, 2);
  B(2 * k + 1, 2 * l - 1) = Rational(-1, 2);
  const Matrix<Rational> gram = B.transpose() * G * B;
  const WittDecomposition D(l, false);
  rep.embedding_holds = gram == Matrix<Rational>::from_rows(D.space().gram()) && determinant(B) != 0;

  // The Cartan of B_(l-1) is spanned by h'_i = h_i (i < l), since n'_i, p'_i
  // are basis vectors of both Witt bases.
  const int n = 1 << l;
  std::vector<Matrix<Rational>> h;
  for (int i = 1; i <= k; ++i) h.push_back(action_matrix(D, cartan_element(D, i)));
  for (int omega = 0; omega < n; ++omega) {
    Weight w(k);
    for (int i = 0; i < k; ++i) w[i] = h[i](omega, omega);
    (spinor_parity_odd(omega) ? rep.restricted_minus : rep.restricted_plus).add(w);
  }
  rep.target = spin_weights(SpinType::B, k);
  return rep;
}

CentralInvolutionReport central_involution_check(int l) {
  const WittDecomposition W(l, false);
  const SpaceQ& V = W.space();
  const int m = W.dim();
  CentralInvolutionReport rep;
  rep.rank = l;
  std::vector<MultivectorQ> basis;
  for (int i = 1; i <= l; ++i) {
    const auto n = MultivectorQ::generator(i), p = MultivectorQ::generator(l + i);
    basis.push_back(n + p);
    basis.push_back(n - p);
  }
  rep.orthogonal_basis = true;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const auto s = geometric_product(basis[a], basis[b], V) + geometric_product(basis[b], basis[a], V);
      if (!s.is_zero()) rep.orthogonal_basis = false;
    }
  MultivectorQ w = MultivectorQ::one();
  for (const auto& v : basis) w = geometric_product(w, v, V);
  const MultivectorQ sq = geometric_product(w, w, V);
  // Normalize by the scalar square when it is a rational square.
  if (is_scalar(sq) && scalar_part(sq) != 0 && scalar_part(sq) != 1) {
    const Rational s = scalar_part(sq);
    mpz_class num = s.get_num(), den = s.get_den();
    if (s > 0 && mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
      w *= Rational(rd, rn);
    }
  }
  rep.w = w;
  rep.square_is_one = geometric_product(w, w, V) == MultivectorQ::one();
  rep.anticommutes = true;
  for (int k = 1; k <= m; ++k) {
    const auto e = MultivectorQ::generator(k);
    if (!(geometric_product(w, e, V) + geometric_product(e, w, V)).is_zero()) rep.anticommutes = false;
  }
  const Matrix<Rational> R = action_matrix(W, w);
  const int n = 1 << l;
  const Rational c = R(0, 0);
  bool scalar_blocks = c != 0;
  for (int r = 0; r < n && scalar_blocks; ++r)
    for (int col = 0; col < n; ++col) {
      const Rational want = r != col ? Rational(0) : (spinor_parity_odd(r) ? Rational(-c) : c);
      if (R(r, col) != want) {
        scalar_blocks = false;
        break;
      }
    }
  if (scalar_blocks) rep.c = c;
  return rep;
}

}  // namespace cliffalg
