#pragma once

#include <cliffalg/blade.hpp>
#include <cliffalg/error.hpp>
#include <cliffalg/quadratic_space.hpp>
#include <cliffalg/ring.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cliffalg {

/// Sparse element of a Clifford algebra: canonical blades with nonzero
/// coefficients. Values carry no reference to a quadratic space; products take
/// the space explicitly.
template <CoefficientRing R>
class Multivector {
 public:
  using Ring = R;
  using Terms = std::map<Blade, R>;

  Multivector() = default;

  static Multivector scalar(const R& c) { return blade(Blade{0}, c); }
  static Multivector one() { return scalar(R(1)); }
  static Multivector generator(int i) {
    if (i < 1 || i > kMaxGenerators) throw IndexOutOfRange("generator index " + std::to_string(i));
    return blade(generator_blade(i), R(1));
  }
  static Multivector blade(Blade b, const R& c = R(1)) {
    Multivector x;
    x.add_term(b, c);
    return x;
  }
  /// Linear combination of generators, v = sum_i coords[i-1] e_i.
  static Multivector vector(const std::vector<R>& coords) {
    Multivector x;
    for (std::size_t i = 0; i < coords.size(); ++i) x.add_term(generator_blade(static_cast<int>(i) + 1), coords[i]);
    return x;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  R coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? R(0) : it->second;
  }

  void add_term(Blade b, const R& c) {
    if (cliffalg::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (cliffalg::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Largest generator index occurring in any term (0 for scalars and zero).
  int max_index() const noexcept {
    Blade all = 0;
    for (const auto& [b, c] : terms_) all |= b;
    return top_index(all);
  }

  Multivector& operator+=(const Multivector& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (const auto& [b, c] : o.terms_) add_term(b, R(-c));
    return *this;
  }
  Multivector& operator*=(const R& s) {
    if (cliffalg::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = R(it->second * s);
      if (cliffalg::is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }
  Multivector operator-() const {
    Multivector r = *this;
    r *= R(-1);
    return r;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const R& s, Multivector a) { return a *= s; }
  friend bool operator==(const Multivector& a, const Multivector& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + coefficient_string(c) + ")*" + blade_name(b);
    }
    return out;
  }

 private:
  Terms terms_;
};

namespace detail {

/// e_A * e_j expanded with the two defining relations only:
/// e_k e_k = q(e_k), and for k > j, e_k e_j = b(e_k, e_j) - e_j e_k.
template <CoefficientRing R>
void blade_times_generator(Blade a, int j, const R& coeff, const QuadraticSpace<R>& V,
                           std::map<Blade, R>& out) {
  if (is_zero(coeff)) return;
  const int k = top_index(a);
  if (k < j) {
    auto [it, ins] = out.try_emplace(a | generator_blade(j), coeff);
    if (!ins) it->second += coeff;
    return;
  }
  const Blade rest = a & ~generator_blade(k);
  if (k == j) {
    R c(coeff * V.q(j));
    if (is_zero(c)) return;
    auto [it, ins] = out.try_emplace(rest, c);
    if (!ins) it->second += c;
    return;
  }
  // k > j: e_rest e_k e_j = b(k,j) e_rest - (e_rest e_j) e_k; the right factor
  // e_k exceeds every index of e_rest e_j, so appending it stays canonical.
  R bkj = V.b(k, j);
  if (!is_zero(bkj)) {
    R c(coeff * bkj);
    auto [it, ins] = out.try_emplace(rest, c);
    if (!ins) it->second += c;
  }
  std::map<Blade, R> inner;
  blade_times_generator(rest, j, R(-coeff), V, inner);
  const Blade kb = generator_blade(k);
  for (auto& [b, c] : inner) {
    if (is_zero(c)) continue;
    auto [it, ins] = out.try_emplace(b | kb, c);
    if (!ins) it->second += c;
  }
}

/// Number of transpositions needed to sort the concatenated word A·B when
/// all generators anticommute.
constexpr int reorder_swaps(Blade a, Blade b) noexcept {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += std::popcount(a & b);
    a >>= 1;
  }
  return swaps;
}

template <CoefficientRing R>
void accumulate_blade_product(Blade a, Blade b, const R& coeff, const QuadraticSpace<R>& V,
                              std::map<Blade, R>& out) {
  if (V.is_diagonal()) {
    R c = (reorder_swaps(a, b) & 1) ? R(-coeff) : coeff;
    for (Blade common = a & b; common != 0; common &= common - 1) {
      c = R(c * V.q(std::countr_zero(common) + 1));
      if (is_zero(c)) return;
    }
    auto [it, ins] = out.try_emplace(a ^ b, c);
    if (!ins) it->second += c;
    return;
  }
  std::map<Blade, R> cur{{a, coeff}};
  for (Blade rem = b; rem != 0; rem &= rem - 1) {
    const int j = std::countr_zero(rem) + 1;
    std::map<Blade, R> next;
    for (const auto& [blade, c] : cur) blade_times_generator(blade, j, c, V, next);
    cur.swap(next);
  }
  for (auto& [blade, c] : cur) {
    if (is_zero(c)) continue;
    auto [it, ins] = out.try_emplace(blade, c);
    if (!ins) it->second += c;
  }
}

template <CoefficientRing R>
void check_fits(const Multivector<R>& x, const QuadraticSpace<R>& V) {
  if (x.max_index() > V.dim())
    throw IndexOutOfRange("multivector uses generator e_" + std::to_string(x.max_index()) +
                          " but the space has dimension " + std::to_string(V.dim()));
}

template <CoefficientRing R>
Multivector<R> from_accumulator(std::map<Blade, R>& acc) {
  Multivector<R> r;
  for (auto& [b, c] : acc) r.add_term(b, c);
  return r;
}

}  // namespace detail

template <CoefficientRing R>
Multivector<R> geometric_product(const Multivector<R>& x, const Multivector<R>& y, const QuadraticSpace<R>& V) {
  detail::check_fits(x, V);
  detail::check_fits(y, V);
  std::map<Blade, R> acc;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) detail::accumulate_blade_product(a, b, R(ca * cb), V, acc);
  return detail::from_accumulator(acc);
}

/// Principal anti-automorphism: fixes vectors, reverses products. Each blade's
/// generator word is reversed and multiplied out again.
template <CoefficientRing R>
Multivector<R> reverse(const Multivector<R>& x, const QuadraticSpace<R>& V) {
  detail::check_fits(x, V);
  std::map<Blade, R> acc;
  for (const auto& [b, c] : x.terms()) {
    std::map<Blade, R> cur{{Blade{0}, c}};
    for (int i = top_index(b); i >= 1; --i) {
      if (!contains(b, i)) continue;
      std::map<Blade, R> next;
      for (const auto& [blade, cc] : cur) detail::blade_times_generator(blade, i, cc, V, next);
      cur.swap(next);
    }
    for (auto& [blade, cc] : cur) {
      if (is_zero(cc)) continue;
      auto [it, ins] = acc.try_emplace(blade, cc);
      if (!ins) it->second += cc;
    }
  }
  return detail::from_accumulator(acc);
}

template <CoefficientRing R>
Multivector<R> grade_involution(const Multivector<R>& x) {
  Multivector<R> r;
  for (const auto& [b, c] : x.terms()) r.add_term(b, is_even_blade(b) ? c : R(-c));
  return r;
}

template <CoefficientRing R>
Multivector<R> even_part(const Multivector<R>& x) {
  Multivector<R> r;
  for (const auto& [b, c] : x.terms())
    if (is_even_blade(b)) r.add_term(b, c);
  return r;
}

template <CoefficientRing R>
Multivector<R> odd_part(const Multivector<R>& x) {
  Multivector<R> r;
  for (const auto& [b, c] : x.terms())
    if (!is_even_blade(b)) r.add_term(b, c);
  return r;
}

template <CoefficientRing R>
int filtration_degree(const Multivector<R>& x) {
  int d = 0;
  for (const auto& [b, c] : x.terms()) d = std::max(d, grade(b));
  return d;
}

/// The zero element counts as both even and odd.
template <CoefficientRing R>
bool is_even(const Multivector<R>& x) {
  for (const auto& [b, c] : x.terms())
    if (!is_even_blade(b)) return false;
  return true;
}

template <CoefficientRing R>
bool is_odd(const Multivector<R>& x) {
  for (const auto& [b, c] : x.terms())
    if (is_even_blade(b)) return false;
  return true;
}

template <CoefficientRing R>
bool is_homogeneous(const Multivector<R>& x) {
  return is_even(x) || is_odd(x);
}

template <CoefficientRing R>
bool is_scalar(const Multivector<R>& x) {
  return x.is_zero() || (x.size() == 1 && x.terms().begin()->first == 0);
}

template <CoefficientRing R>
R scalar_part(const Multivector<R>& x) {
  return x.coefficient(0);
}

/// Coefficient-wise substitution t = c. Throws PoleError naming the first
/// blade whose coefficient is not regular at c.
template <ParametricRing P>
Multivector<Rational> specialize(const Multivector<P>& x, const Rational& c) {
  Multivector<Rational> r;
  for (const auto& [b, coeff] : x.terms()) {
    auto v = specialize_coefficient(coeff, c);
    if (!v) throw PoleError("coefficient of " + blade_name(b), to_string(c));
    r.add_term(b, *v);
  }
  return r;
}

template <ParametricRing P>
QuadraticSpace<Rational> specialize(const QuadraticSpace<P>& V, const Rational& c) {
  SquareMatrix<Rational> g(V.dim(), std::vector<Rational>(V.dim()));
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j) {
      auto v = specialize_coefficient(V.gram()[i][j], c);
      if (!v) throw PoleError("Q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", to_string(c));
      g[i][j] = *v;
    }
  return QuadraticSpace<Rational>(V.dim(), std::move(g));
}

/// Change of coefficient ring along the obvious inclusion (Q -> Q[t] -> Q(t)).
template <CoefficientRing To, CoefficientRing From>
Multivector<To> convert(const Multivector<From>& x) {
  Multivector<To> r;
  for (const auto& [b, c] : x.terms()) r.add_term(b, To(c));
  return r;
}

template <CoefficientRing To, CoefficientRing From>
QuadraticSpace<To> convert(const QuadraticSpace<From>& V) {
  SquareMatrix<To> g(V.dim(), std::vector<To>(V.dim()));
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j) g[i][j] = To(V.gram()[i][j]);
  return QuadraticSpace<To>(V.dim(), std::move(g));
}

using MultivectorQ = Multivector<Rational>;
using SpaceQ = QuadraticSpace<Rational>;

}  // namespace cliffalg
