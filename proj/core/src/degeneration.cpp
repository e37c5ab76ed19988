#include <cliffalg/degeneration.hpp>

namespace cliffalg {

namespace {

SparseVector sparse(const std::vector<Rational>& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s[static_cast<std::uint32_t>(i)] = v[i];
  return s;
}

std::vector<Rational> dense(const SparseVector& s, int d) {
  std::vector<Rational> v(d);
  for (const auto& [i, x] : s) v[i] = x;
  return v;
}

std::vector<Rational> unit(int d, int k) {
  std::vector<Rational> v(d);
  v[k] = 1;
  return v;
}

}  // namespace

RadicalReport jacobson_radical(const AlgebraTensor<Rational>& T) {
  if (auto defect = unitality_defect(T)) throw PreconditionError("radical needs a unital tensor: " + *defect);
  RadicalReport rep;
  rep.algebra_dim = T.dim;
  rep.basis = kernel(trace_form(T));
  const int d = T.dim;

  SparseSpan rad;
  for (const auto& r : rep.basis) rad.insert(sparse(r));
  rep.is_ideal = true;
  for (const auto& r : rep.basis) {
    for (int a = 0; a < d && rep.is_ideal; ++a) {
      const auto ea = unit(d, a);
      if (!rad.contains(sparse(T.multiply(r, ea))) || !rad.contains(sparse(T.multiply(ea, r)))) rep.is_ideal = false;
    }
    if (!rep.is_ideal) break;
  }

  // rad^1 = rad, rad^(k+1) = span(rad^k * rad); nil iff this reaches 0.
  if (rep.basis.empty()) {
    rep.is_nil = true;
    rep.nilpotency_index = 0;
    return rep;
  }
  std::vector<std::vector<Rational>> power = rep.basis;
  int k = 1;
  while (!power.empty()) {
    SparseSpan next;
    for (const auto& x : power)
      for (const auto& r : rep.basis) next.insert(sparse(T.multiply(x, r)));
    ++k;
    if (next.dim() >= static_cast<int>(power.size())) {
      rep.is_nil = false;
      rep.nilpotency_index = 0;
      return rep;
    }
    power.clear();
    for (const auto& [p, row] : next.rows()) power.push_back(dense(row, d));
  }
  rep.is_nil = true;
  rep.nilpotency_index = k;
  return rep;
}

SpecializationWitness certify_specialization(const QuadraticFamily& F) {
  const int m = F.dim();
  if (m % 2 == 0) throw PreconditionError("certify_specialization needs odd m");
  SpecializationWitness w;
  w.m = m;
  Matrix<RationalFunction> twoQ = Matrix<RationalFunction>::from_rows(F.gram());
  twoQ *= RationalFunction(2);
  w.det = determinant(twoQ);
  if (w.det.is_zero()) throw DegenerateFamily("det 2Q(t) vanishes identically; the generic fiber is degenerate");

  const AlgebraTensor<RationalFunction> T = family_tensor(F);
  w.fiber_dim = T.dim;
  w.generic_semisimple = rank(trace_form(T)) == T.dim;
  w.special_fiber = specialize(T, Rational(0));
  w.fibers_free = w.special_fiber.dim == (1 << (m - 1)) && !unitality_defect(w.special_fiber).has_value() &&
                  w.special_fiber == theta_tensor(specialize(F, Rational(0)));
  w.radical = jacobson_radical(w.special_fiber);
  return w;
}

SpecializationWitness certify_specialization(const QuadraticSpace<Polynomial>& F) {
  return certify_specialization(convert<RationalFunction>(F));
}

}  // namespace cliffalg
