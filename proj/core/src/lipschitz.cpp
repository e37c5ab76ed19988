#include <cliffalg/lipschitz.hpp>

#include <bit>

namespace cliffalg {

namespace {

SpaceQ standard_of(const SpaceQ& V) {
  const int m = V.dim();
  SquareMatrix<Rational> g(2 * m, std::vector<Rational>(2 * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      g[i][j] = V.gram()[i][j];
      g[m + i][m + j] = -V.gram()[i][j];
    }
  return SpaceQ(2 * m, std::move(g));
}

SpaceQ split_of(const SpaceQ& V) {
  // b(delta_i, delta'_j) = b_q(e_i, e_j) - b_{-q}(e_i, e_j) = 4 Q[i][j].
  const int m = V.dim();
  SquareMatrix<Rational> g(2 * m, std::vector<Rational>(2 * m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      g[i][m + j] = 2 * V.gram()[i][j];
      g[m + j][i] = g[i][m + j];
    }
  return SpaceQ(2 * m, std::move(g));
}

Cl0Subspace balanced_blades(int m) {
  Cl0Subspace S;
  S.m = m;
  const Blade low = (Blade{1} << m) - 1;
  for (Blade b : blades_by_grade(2 * m))
    if (std::popcount(b & low) == std::popcount(b >> m)) S.basis.push_back(b);
  return S;
}

}  // namespace

bool Cl0Subspace::contains_blade(Blade b) const noexcept {
  const Blade low = (Blade{1} << m) - 1;
  return std::popcount(b & low) == std::popcount(b >> m);
}

DoubledAlgebra::DoubledAlgebra(const SpaceQ& V)
    : m_(V.dim()), base_(V), standard_(standard_of(V)), split_(split_of(V)), cl0_(balanced_blades(V.dim())) {
  if (2 * m_ > kMaxGenerators) throw PreconditionError("doubled algebra needs m <= 15");
}

MultivectorQ DoubledAlgebra::f(int i) const {
  base_.check_index(i);
  return MultivectorQ::generator(i);
}

MultivectorQ DoubledAlgebra::g(int i) const {
  base_.check_index(i);
  return MultivectorQ::generator(m_ + i);
}

MultivectorQ DoubledAlgebra::grading_derivation(const MultivectorQ& z) const {
  detail::check_fits(z, standard_);
  const Blade low = (Blade{1} << m_) - 1;
  std::map<Blade, Rational> acc;
  auto add = [&](Blade b, const Rational& c) {
    if (c == 0) return;
    auto [it, ins] = acc.try_emplace(b, c);
    if (!ins) it->second += c;
  };
  for (const auto& [blade, c] : z.terms()) {
    const Blade A = blade & low;
    const Blade B = blade & ~low;
    const int k = grade(A);
    int t = 0;
    // f_a -> g_a, moved right past the remaining f's.
    for (int a : blade_indices(A)) {
      ++t;
      const Rational sign = ((k - t) & 1) ? Rational(-1) : Rational(1);
      const auto gg = geometric_product(MultivectorQ::generator(m_ + a), MultivectorQ::blade(B), standard_);
      const Blade rest = A & ~generator_blade(a);
      for (const auto& [gb, gc] : gg.terms()) add(rest | gb, sign * c * gc);
    }
    int s = 0;
    // g_b -> f_b, moved left past the preceding g's.
    for (int b : blade_indices(B)) {
      ++s;
      const int base_index = b - m_;
      const Rational sign = ((s - 1) & 1) ? Rational(-1) : Rational(1);
      const auto ff = geometric_product(MultivectorQ::blade(A), MultivectorQ::generator(base_index), standard_);
      const Blade rest = B & ~generator_blade(b);
      for (const auto& [fb, fc] : ff.terms()) add(fb | rest, sign * c * fc);
    }
  }
  return detail::from_accumulator(acc);
}

MultivectorQ DoubledAlgebra::to_split(const MultivectorQ& z) const {
  detail::check_fits(z, standard_);
  MultivectorQ out;
  const Rational half(1, 2);
  for (const auto& [blade, c] : z.terms()) {
    MultivectorQ acc = MultivectorQ::scalar(c);
    for (int idx : blade_indices(blade)) {
      const bool is_f = idx <= m_;
      const int i = is_f ? idx : idx - m_;
      MultivectorQ v;
      v.add_term(generator_blade(i), half);
      v.add_term(generator_blade(m_ + i), is_f ? half : Rational(-half));
      acc = geometric_product(acc, v, split_);
    }
    out += acc;
  }
  return out;
}

bool DoubledAlgebra::in_cl0_by_coordinates(const MultivectorQ& z) const {
  const MultivectorQ split = to_split(z);
  for (const auto& [b, c] : split.terms())
    if (!cl0_.contains_blade(b)) return false;
  return true;
}

bool is_lipschitz(const MultivectorQ& x, const DoubledAlgebra& D) {
  if (x.is_zero() || !is_homogeneous(x)) return false;
  return D.in_cl0(D.embed_pair(x, reverse(x, D.base())));
}

bool is_lipschitz(const MultivectorQ& x, const SpaceQ& V) { return is_lipschitz(x, DoubledAlgebra(V)); }

LipschitzVerdict classify_lipschitz(const MultivectorQ& x, const DoubledAlgebra& D) {
  LipschitzVerdict v;
  const SpaceQ& V = D.base();
  v.homogeneous = is_homogeneous(x);
  const MultivectorQ tx = reverse(x, V);
  v.cl0_member = D.in_cl0(D.embed_pair(x, tx));
  const MultivectorQ n1 = geometric_product(x, tx, V);
  const MultivectorQ n2 = geometric_product(tx, x, V);
  v.norm_two_sided = n1 == n2;
  if (is_scalar(n1)) v.norm_scalar = scalar_part(n1);
  const bool lip = !x.is_zero() && v.homogeneous && v.cl0_member;
  const bool group = lip && v.norm_two_sided && v.norm_scalar && *v.norm_scalar != 0;
  if (!lip)
    v.verdict = "none";
  else if (!group)
    v.verdict = "monoid";
  else if (is_even(x) && *v.norm_scalar == 1)
    v.verdict = "spin";
  else
    v.verdict = "group";
  return v;
}

LipschitzVerdict classify_lipschitz(const MultivectorQ& x, const SpaceQ& V) {
  return classify_lipschitz(x, DoubledAlgebra(V));
}

bool is_glip(const MultivectorQ& x, const SpaceQ& V) {
  const auto v = classify_lipschitz(x, V);
  return v.verdict == "group" || v.verdict == "spin";
}

bool is_spin_kernel(const MultivectorQ& x, const SpaceQ& V) { return classify_lipschitz(x, V).verdict == "spin"; }

InfinitesimalReport infinitesimal_lipschitz(const SpaceQ& V) {
  const DoubledAlgebra D(V);
  const int m = V.dim();
  InfinitesimalReport rep;
  rep.m = m;
  const auto basis = even_blades(m);
  const int n = static_cast<int>(basis.size());
  const auto Vd = convert<DualNumber>(V);
  const DualNumber eps = DualNumber::epsilon();

  // Column k: residual D(eps-part of embed(1 + eps E_k, tau(1 + eps E_k))).
  std::vector<MultivectorQ> residuals;
  std::map<Blade, int> rows;
  for (Blade b : basis) {
    Multivector<DualNumber> x = Multivector<DualNumber>::one();
    x.add_term(b, eps);
    const auto e = D.embed_pair(x, reverse(x, Vd));
    MultivectorQ re, ep;
    for (const auto& [blade, c] : e.terms()) {
      re.add_term(blade, c.re);
      ep.add_term(blade, c.eps);
    }
    if (!D.in_cl0(re)) throw std::logic_error("order-zero part of 1 + eps X left Cl^0");
    residuals.push_back(D.grading_derivation(ep));
    for (const auto& [blade, c] : residuals.back().terms()) rows.try_emplace(blade, static_cast<int>(rows.size()));
  }
  Matrix<Rational> A(static_cast<int>(rows.size()), n);
  for (int k = 0; k < n; ++k)
    for (const auto& [blade, c] : residuals[k].terms()) A(rows.at(blade), k) = c;
  for (const auto& v : kernel(A)) {
    MultivectorQ X;
    for (int k = 0; k < n; ++k) X.add_term(basis[k], v[k]);
    rep.solution_basis.push_back(X);
  }

  bool low_degree = true;
  for (const auto& X : rep.solution_basis)
    if (filtration_degree(X) > 2) low_degree = false;
  rep.equals_cl_plus_le2 = low_degree && rep.solution_dim() == 1 + m * (m - 1) / 2;

  // X + tau(X) = 0 restricted to the solution space.
  std::vector<MultivectorQ> images;
  std::map<Blade, int> irows;
  for (const auto& X : rep.solution_basis) {
    images.push_back(X + reverse(X, V));
    for (const auto& [blade, c] : images.back().terms()) irows.try_emplace(blade, static_cast<int>(irows.size()));
  }
  Matrix<Rational> B(static_cast<int>(irows.size()), rep.solution_dim());
  for (int k = 0; k < rep.solution_dim(); ++k)
    for (const auto& [blade, c] : images[k].terms()) B(irows.at(blade), k) = c;
  for (const auto& v : kernel(B)) {
    MultivectorQ X;
    for (int k = 0; k < rep.solution_dim(); ++k)
      if (v[k] != 0) X += v[k] * rep.solution_basis[k];
    rep.spin_basis.push_back(X);
  }
  return rep;
}

}  // namespace cliffalg
