#include <cliffalg_selftest/criteria.hpp>
#include <cliffalg_selftest/oracles.hpp>

#include <cliffalg/degeneration.hpp>
#include <cliffalg/json_io.hpp>
#include <cliffalg/lie_structure.hpp>
#include <cliffalg/lipschitz.hpp>
#include <cliffalg/local_models.hpp>
#include <cliffalg/plethysm.hpp>
#include <cliffalg/random.hpp>
#include <cliffalg/spinor.hpp>

#include <chrono>
#include <sstream>

namespace cliffalg::selftest {

namespace jio = cliffalg::json_io;

namespace {

Outcome pass(std::string detail) { return {true, std::move(detail), nullptr}; }
Outcome fail(std::string detail, nlohmann::json counterexample = nullptr) {
  return {false, std::move(detail), std::move(counterexample)};
}

std::vector<Rational> unit(int n, int a) {
  std::vector<Rational> v(n);
  v[a] = 1;
  return v;
}

Outcome form_reconstruction(std::uint64_t seed) {
  Rng rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(rng.integer(3, 9));
    const SpaceQ V = trial % 4 == 3 ? random_space_with_corank(rng, m, static_cast<int>(rng.integer(1, m)))
                                    : random_space(rng, m);
    try {
      if (!(reconstruct_form(structure_constants(V)) == V)) return fail("recovered form differs", jio::to_json(V));
    } catch (const Error& e) {
      return fail(e.what(), jio::to_json(V));
    }
  }
  return pass("200 random forms, m in 3..9");
}

Outcome constant_oracle(std::uint64_t seed) {
  Rng rng(seed);
  long compared = 0;
  for (int m = 2; m <= 7; ++m)
    for (int trial = 0; trial < 2; ++trial) {
      const SpaceQ V = trial == 0 ? random_space(rng, m) : random_space_with_corank(rng, m, 1);
      const auto L = structure_constants(V);
      const int n = L.dim();
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const auto [i, j] = L.labels[a];
          const auto [k, l] = L.labels[b];
          if (L.bracket(unit(n, a), unit(n, b)) != oracle::closed_form_bracket(V, i, j, k, l))
            return fail("bracket [abar_" + std::to_string(i) + std::to_string(j) + ", abar_" + std::to_string(k) +
                            std::to_string(l) + "] disagrees",
                        jio::to_json(V));
          ++compared;
        }
    }
  return pass(std::to_string(compared) + " brackets, m in 2..7");
}

Outcome matrix_identification(std::uint64_t) {
  for (int l = 1; l <= 4; ++l)
    for (bool odd : {true, false}) {
      const auto rep = even_algebra_isomorphism_check(WittDecomposition(l, odd));
      const int expected = odd ? 1 << (2 * l) : 1 << (2 * l - 1);
      if (!rep.bijective() || rep.image_rank != expected)
        return fail(std::string(odd ? "B" : "D") + std::to_string(l) + ": " + rep.failure.value_or("rank " +
                    std::to_string(rep.image_rank) + " of " + std::to_string(expected)),
                    {{"l", l}, {"odd", odd}});
    }
  return pass("l = 1..4, odd and even");
}

Outcome even_to_odd(std::uint64_t) {
  for (int l = 2; l <= 7; ++l) {
    const auto rep = restrict_even_to_odd(l);
    if (!rep.ok())
      return fail("D" + std::to_string(l) + " -> B" + std::to_string(l - 1) + " restriction differs", {{"l", l}});
  }
  return pass("l = 2..7");
}

// Products of one to three factors, each a vector or lambda + a b.
MultivectorQ lipschitz_sample(Rng& rng, const SpaceQ& V) {
  MultivectorQ x = MultivectorQ::one();
  const int factors = static_cast<int>(rng.integer(1, 3));
  for (int f = 0; f < factors; ++f) {
    const MultivectorQ y = rng.coin() ? random_vector(rng, V.dim())
                                      : MultivectorQ::scalar(rng.rational(3, 2)) +
                                            geometric_product(random_vector(rng, V.dim()), random_vector(rng, V.dim()), V);
    x = geometric_product(x, y, V);
  }
  return x;
}

SpaceQ form_of_kind(Rng& rng, int m, int kind) {
  if (kind == 0) return random_space(rng, m);
  if (kind == 1) return random_space_with_corank(rng, m, std::min(1, m));
  return SpaceQ::zero(m);
}

Outcome lipschitz_axioms(std::uint64_t seed) {
  Rng rng(seed);
  int generators = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int m = static_cast<int>(rng.integer(1, 5));
    const SpaceQ V = form_of_kind(rng, m, trial % 3);
    const DoubledAlgebra D(V);
    const auto a = random_vector(rng, m), b = random_vector(rng, m);
    const auto lab = MultivectorQ::scalar(rng.rational(3, 2)) + geometric_product(a, b, V);
    for (const auto& x : {a, lab}) {
      if (x.is_zero()) continue;
      if (!is_lipschitz(x, D)) return fail("generator rejected", {{"space", jio::to_json(V)}, {"x", jio::to_json(x)}});
      ++generators;
    }
  }
  int products = 0;
  for (int trial = 0; products < 500 && trial < 2000; ++trial) {
    const int m = static_cast<int>(rng.integer(1, 5));
    const SpaceQ V = form_of_kind(rng, m, trial % 3);
    const auto x = lipschitz_sample(rng, V);
    if (x.is_zero()) continue;
    const DoubledAlgebra D(V);
    const nlohmann::json cx{{"space", jio::to_json(V)}, {"x", jio::to_json(x)}};
    if (!is_lipschitz(x, D)) return fail("product rejected", cx);
    const auto rx = reverse(x, V);
    if (!is_lipschitz(rx, D)) return fail("tau(x) rejected", cx);
    const auto n1 = geometric_product(x, rx, V);
    if (!is_scalar(n1) || !(n1 == geometric_product(rx, x, V))) return fail("norm is not a two-sided scalar", cx);
    ++products;
  }
  if (products < 500) return fail("only " + std::to_string(products) + " nonzero products sampled");
  for (int m = 1; m <= 6; ++m)
    for (int kind = 0; kind < 3; ++kind) {
      const SpaceQ V = form_of_kind(rng, m, kind);
      const auto rep = infinitesimal_lipschitz(V);
      if (!rep.equals_cl_plus_le2 || rep.spin_dim() != m * (m - 1) / 2)
        return fail("infinitesimal space: spin dim " + std::to_string(rep.spin_dim()), jio::to_json(V));
    }
  return pass(std::to_string(generators) + " generators, 500 products, infinitesimal m = 1..6");
}

Outcome degeneration(std::uint64_t) {
  std::ostringstream detail;
  for (int m : {3, 5, 7}) {
    std::vector<Polynomial> d(m, Polynomial(1));
    d.back() = Polynomial::t();
    const auto w = certify_specialization(QuadraticSpace<Polynomial>::diagonal(d));
    const int kernel = w.special_fiber.dim - oracle::trace_form_rank(w.special_fiber);
    const nlohmann::json cx{{"m", m}};
    if (!w.valid()) return fail("certificate invalid for m = " + std::to_string(m), cx);
    if (w.radical.dim() <= 0 || w.radical.dim() != kernel)
      return fail("radical dimension " + std::to_string(w.radical.dim()) + ", trace-form kernel " +
                      std::to_string(kernel),
                  cx);
    if (!w.radical.is_nil) return fail("radical is not nil", cx);
    detail << (m == 3 ? "" : ", ") << "m=" << m << ": rad " << w.radical.dim();
  }
  return pass(detail.str());
}

std::string labels_string(const std::vector<Rational>& labels) {
  std::string s = "[";
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + to_string(labels[i]);
  return s + "]";
}

Outcome plethysm_g2(std::uint64_t) {
  const auto rep = verify_plethysm(PlethysmCase::G2);
  for (int sign : {+1, -1}) {
    const auto& d = rep.halfspin(sign);
    if (!d.irreducible()) return fail("restriction is reducible", jio::to_json(d));
    if (d.constituents[0].highest_weight != rep.rho || d.constituents[0].dim != 64)
      return fail("highest weight is not rho or dimension is not 64", jio::to_json(d));
  }
  return pass("S+ and S- restrict to V_rho, dim 64");
}

Outcome plethysm_f4_c3(std::uint64_t) {
  std::ostringstream detail;
  for (auto which : {PlethysmCase::F4, PlethysmCase::C3}) {
    const auto rep = verify_plethysm(which);
    const long expected = 1L << (rep.l - 1);
    for (int sign : {+1, -1}) {
      const auto& d = rep.halfspin(sign);
      if (!d.irreducible() || d.constituents[0].dim != expected)
        return fail(to_string(which) + ": restriction is not a single irreducible of dim " + std::to_string(expected),
                    jio::to_json(d));
    }
    if (rep.plus.constituents[0].highest_weight != rep.minus.constituents[0].highest_weight)
      return fail(to_string(which) + ": S+ and S- give different highest weights");
    detail << (which == PlethysmCase::F4 ? "" : ", ") << rep.subalgebra << " over D" << rep.l << ": dim " << expected
           << ", labels " << labels_string(rep.plus.constituents[0].dynkin_labels);
  }
  return pass(detail.str());
}

MatrixQ M(std::vector<std::vector<Rational>> rows) { return MatrixQ::from_rows(rows); }

Outcome local_models(std::uint64_t seed) {
  const MatrixQ E12 = M({{0, 1}, {0, 0}}), E21 = M({{0, 0}, {1, 0}});
  const MatrixQ D12 = M({{1, 0}, {0, 2}}), D34 = M({{3, 0}, {0, 4}}), D21 = M({{2, 0}, {0, 1}});
  const MatrixQ Z = MatrixQ(2, 2), H = M({{1, 0}, {0, -1}});
  const MatrixTuple nil(2, {E12, E21});
  struct Check {
    const char* name;
    bool ok;
  };
  const Check examples[] = {
      {"nilpotent pair generates M_2", generates_full_algebra(nil)},
      {"identity pair does not generate", !generates_full_algebra(MatrixTuple(2, {MatrixQ::identity(2), MatrixQ::identity(2)}))},
      {"diagonal pair does not generate", !generates_full_algebra(MatrixTuple(2, {D12, D34}))},
      {"(1,0) is cyclic for the nilpotent pair", is_cyclic_vector(nil, {1, 0})},
      {"zero vector is not cyclic", !is_cyclic_vector(nil, {0, 0})},
      {"(1,0) is not cyclic for a diagonal pair", !is_cyclic_vector(MatrixTuple(2, {D12, D34}), {1, 0})},
      {"permuted diagonals are S-equivalent", s_equivalent(MatrixTuple(2, {D12, Z}), MatrixTuple(2, {D21, Z}))},
      {"(E12, 0) is S-equivalent to 0", s_equivalent(MatrixTuple(2, {E12, Z}), zero_tuple(2, 2))},
      {"centralizer of the nilpotent pair in sl2 is 0", centralizer_dim(nil, sl2_basis()) == 0},
      {"centralizer of 0 is sl2", centralizer_dim(zero_tuple(2, 2), sl2_basis()) == 3},
      {"centralizer of (H, 0) is the Cartan line", centralizer_dim(MatrixTuple(2, {H, Z}), sl2_basis()) == 1},
  };
  for (const auto& c : examples)
    if (!c.ok) return fail(c.name);

  Rng rng(seed);
  for (int t = 0; t < 50; ++t) {
    const int n = static_cast<int>(rng.integer(1, 3));
    std::vector<MatrixQ> X;
    for (int k = 0; k < 2; ++k) {
      MatrixQ m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rng.integer(-2, 2);
      X.push_back(m);
    }
    const MatrixTuple T(n, X);
    const MatrixQ P = random_invertible(rng, n);
    if (!s_equivalent(T, T.conjugated(P))) return fail("conjugate is not S-equivalent", jio::to_json(T));
  }

  // A generic traceless pair has trivial centralizer.
  int generic = 0;
  for (int t = 0; t < 20 && generic < 10; ++t) {
    std::vector<MatrixQ> X;
    for (int k = 0; k < 2; ++k) {
      MatrixQ m(2, 2);
      m(0, 0) = rng.integer(-3, 3);
      m(1, 1) = -m(0, 0);
      m(0, 1) = rng.integer(-3, 3);
      m(1, 0) = rng.integer(-3, 3);
      X.push_back(m);
    }
    const MatrixTuple T(2, X);
    if (!generates_full_algebra(T)) continue;
    if (centralizer_dim(T, sl2_basis()) != 0) return fail("generic sl2 pair has a centralizer", jio::to_json(T));
    ++generic;
  }
  if (generic == 0) return fail("no generic sl2 pair sampled");

  for (const auto& [l, odd] : std::vector<std::pair<int, bool>>{{1, true}, {2, false}, {2, true}, {3, false}, {3, true}}) {
    const WittDecomposition W(l, odd);
    const auto L = structure_constants(W.space());
    for (int t = 0; t < 4; ++t) {
      std::vector<Rational> x(L.dim()), y(L.dim());
      for (auto& c : x) c = rng.integer(-2, 2);
      for (auto& c : y) c = rng.integer(-2, 2);
      if (!(spin_image(W, L.bracket(x, y)) == commutator(spin_image(W, x), spin_image(W, y))))
        return fail("spin image does not respect a bracket", {{"l", l}, {"odd", odd}});
    }
  }
  return pass("11 examples, 50 conjugations, " + std::to_string(generic) + " generic sl2 pairs, spin image brackets");
}

Outcome weyl_dimension(std::uint64_t) {
  std::ostringstream detail;
  for (const char* label : {"G2", "F4", "C2", "C3", "C4", "B2", "B3", "B4", "B5", "D3", "D4", "D5", "D6"}) {
    const auto R = parse_root_system(label);
    const Integer d = weyl_dim(R, R.rho());
    if (d != Integer(1) << R.positive_roots().size())
      return fail(std::string(label) + ": dim V_rho = " + d.get_str(), {{"type", label}});
  }
  const auto G2 = parse_root_system("G2"), C3 = parse_root_system("C3");
  if (weyl_dim(G2, G2.rho()) != 64 || weyl_dim(C3, C3.rho()) != 512) return fail("G2 or C3 value differs");
  return pass("13 types, G2: 64, C3: 512");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "form reconstruction round trip", 30, form_reconstruction},
      {2, "structure constants match the closed formulas", 30, constant_oracle},
      {3, "even Clifford algebra is a matrix algebra", 10, matrix_identification},
      {4, "even to odd half-spin restriction", 10, even_to_odd},
      {5, "Lipschitz monoid axioms and infinitesimal space", 60, lipschitz_axioms},
      {6, "degeneration certificate and radical", 30, degeneration},
      {7, "G2 plethysm", 10, plethysm_g2},
      {8, "F4 and C3 plethysm", 120, plethysm_f4_c3},
      {9, "local models", 30, local_models},
      {10, "Weyl dimension of V_rho", 10, weyl_dimension},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, std::uint64_t seed) {
  CriterionResult r;
  r.id = c.id;
  r.title = c.title;
  r.budget_seconds = c.budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.outcome = c.run(seed);
  } catch (const std::exception& e) {
    r.outcome = fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace cliffalg::selftest
