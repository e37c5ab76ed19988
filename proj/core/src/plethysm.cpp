#include <cliffalg/plethysm.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>

namespace cliffalg {

Integer weyl_dim(const RootSystemData& R, const Weight& lambda) {
  if (!R.is_dominant(lambda)) throw PreconditionError("weyl_dim: weight is not dominant");
  const Weight lr = lambda + R.rho();
  Rational d = 1;
  for (const auto& a : R.positive_roots()) d *= R.inner(lr, a) / R.inner(R.rho(), a);
  if (d.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
  return d.get_num();
}

namespace {

bool nonnegative_integral(const std::vector<Rational>& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0 && x.get_den() == 1; });
}

bool below(const RootSystemData& R, const Weight& mu, const Weight& lambda) {
  try {
    return nonnegative_integral(R.simple_coordinates(lambda - mu));
  } catch (const PreconditionError&) {
    return false;
  }
}

}  // namespace

WeightMultiset irrep_weights(const RootSystemData& R, const Weight& lambda) {
  if (!R.is_dominant(lambda)) throw PreconditionError("irrep_weights: weight is not dominant");
  if (!R.is_integral(lambda)) throw PreconditionError("irrep_weights: weight is not integral");

  // Dominant weights below lambda, by depth.
  std::set<Weight> seen{lambda};
  std::vector<std::pair<Rational, Weight>> order{{Rational(0), lambda}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Weight mu = order[i].second;
    for (const auto& a : R.positive_roots()) {
      const Weight nu = R.dominant_conjugate(mu - a);
      if (seen.count(nu) || !below(R, nu, lambda)) continue;
      seen.insert(nu);
      order.emplace_back(R.height(lambda - nu), nu);
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  const Weight lr = lambda + R.rho();
  const Rational top = R.inner(lr, lr);
  std::map<Weight, long long> mult;
  const auto lookup = [&](const Weight& w) -> long long {
    auto it = mult.find(R.dominant_conjugate(w));
    return it == mult.end() ? 0 : it->second;
  };
  for (const auto& [depth, mu] : order) {
    if (sgn(depth) == 0) {
      mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const auto& a : R.positive_roots()) {
      Weight nu = mu + a;
      for (long long m; (m = lookup(nu)) != 0; nu = nu + a) sum += Rational(static_cast<long>(m)) * R.inner(nu, a);
    }
    const Weight mr = mu + R.rho();
    const Rational k = 2 * sum / (top - R.inner(mr, mr));
    if (k.get_den() != 1) throw std::logic_error("Freudenthal multiplicity is not an integer");
    if (sgn(k) != 0) mult[mu] = k.get_num().get_si();
  }

  WeightMultiset W;
  for (const auto& [mu, k] : mult)
    for (const auto& w : R.weyl_orbit(mu)) W.add(w, k);
  return W;
}

WeightMultiset halfspin_weights(int l, int sign) {
  if (l < 1) throw PreconditionError("halfspin_weights: l must be positive");
  if (l > 24) throw PreconditionError("halfspin_weights: l too large");
  WeightMultiset W;
  for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
    if ((std::popcount(mask) % 2 == 0) != (sign > 0)) continue;
    Weight w(l, Rational(1, 2));
    for (int i = 0; i < l; ++i)
      if (mask >> i & 1u) w[i] = Rational(-1, 2);
    W.add(w);
  }
  return W;
}

bool is_orthogonal(const RootSystemData& R, const Weight& lambda) {
  Rational s = 0;
  for (const auto& a : R.positive_roots()) s += 2 * R.inner(lambda, a) / R.inner(a, a);
  if (s.get_den() != 1) throw PreconditionError("is_orthogonal: weight is not integral");
  return s.get_num() % 2 == 0;
}

EmbeddingData EmbeddingData::flipped(int i) const {
  EmbeddingData e = *this;
  e.representatives.at(i) = negate(e.representatives.at(i));
  return e;
}

EmbeddingData make_embedding(const RootSystemData& R, const WeightMultiset& W) {
  EmbeddingData E;
  E.subalgebra = R.label();
  long long zeros = 0;
  for (const auto& [w, k] : W.counts()) {
    for (long long j = 0; j < k; ++j) E.weights.push_back(w);
    if (std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; })) {
      zeros = k;
      continue;
    }
    if (W.multiplicity(negate(w)) != k) throw PreconditionError("make_embedding: weights are not closed under negation");
    const Rational h = R.height(w);
    if (h > 0 || (sgn(h) == 0 && w > negate(w)))
      for (long long j = 0; j < k; ++j) E.representatives.push_back(w);
  }
  if (zeros % 2 != 0) throw PreconditionError("make_embedding: odd number of zero weights");
  for (long long j = 0; j < zeros / 2; ++j) E.representatives.emplace_back(R.ambient_dim());
  return E;
}

WeightMultiset restrict_weights(const WeightMultiset& W, const EmbeddingData& E) {
  if (E.weights.size() != 2 * E.representatives.size())
    throw DimensionMismatch("restrict_weights: embedding has " + std::to_string(E.weights.size()) + " weights for " +
                            std::to_string(E.representatives.size()) + " coordinates");
  if (E.representatives.empty()) throw DimensionMismatch("restrict_weights: empty embedding");
  const std::size_t n = E.representatives.front().size();
  WeightMultiset out;
  for (const auto& [s, k] : W.counts()) {
    if (s.size() != E.representatives.size()) throw DimensionMismatch("restrict_weights: weight length differs from l");
    Weight mu(n);
    for (std::size_t i = 0; i < s.size(); ++i) mu = mu + s[i] * E.representatives[i];
    out.add(mu, k);
  }
  return out;
}

Decomposition identify_irreducible(const WeightMultiset& W, const RootSystemData& R) {
  Decomposition d;
  WeightMultiset rest = W;
  while (!rest.empty()) {
    const Weight* best = nullptr;
    Rational best_h;
    for (const auto& [w, k] : rest.counts()) {
      if (static_cast<int>(w.size()) != R.ambient_dim()) throw DimensionMismatch("identify_irreducible: weight length");
      if (!R.is_dominant(w)) continue;
      Rational h;
      try {
        h = R.height(w);
      } catch (const PreconditionError&) {
        throw NotACharacter("identify_irreducible: weight outside the weight lattice");
      }
      if (!best || h > best_h || (h == best_h && w > *best)) {
        best = &w;
        best_h = h;
      }
    }
    if (!best || !R.is_integral(*best)) throw NotACharacter("identify_irreducible: no integral dominant weight left");
    const Weight lambda = *best;
    const long long k = rest.multiplicity(lambda);
    const WeightMultiset irr = irrep_weights(R, lambda);
    for (const auto& [w, m] : irr.counts()) rest.remove(w, m * k);
    d.constituents.push_back({lambda, R.dynkin_labels(lambda), weyl_dim(R, lambda), k});
  }
  return d;
}

PlethysmCase parse_plethysm_case(const std::string& name) {
  std::string s;
  for (char ch : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (s == "g2") return PlethysmCase::G2;
  if (s == "f4") return PlethysmCase::F4;
  if (s == "c3") return PlethysmCase::C3;
  throw ParseError("unknown plethysm case \"" + name + "\" (expected g2, f4 or c3)");
}

std::string to_string(PlethysmCase c) {
  switch (c) {
    case PlethysmCase::G2:
      return "g2";
    case PlethysmCase::F4:
      return "f4";
    case PlethysmCase::C3:
      return "c3";
  }
  return "?";
}

namespace {

Weight defining_weight(const RootSystemData& R, PlethysmCase which) {
  if (which == PlethysmCase::G2) return R.highest_root();
  const long dim = which == PlethysmCase::F4 ? 26 : 14;
  std::vector<Weight> hits;
  for (const auto& w : R.fundamental_weights())
    if (weyl_dim(R, w) == dim && is_orthogonal(R, w)) hits.push_back(w);
  if (hits.size() != 1) throw std::logic_error("no unique orthogonal fundamental of dimension " + std::to_string(dim));
  return hits.front();
}

}  // namespace

PlethysmReport verify_plethysm(PlethysmCase which) {
  const RootSystemData R = which == PlethysmCase::G2   ? RootSystemData(RootType::G2, 2)
                           : which == PlethysmCase::F4 ? RootSystemData(RootType::F4, 4)
                                                       : RootSystemData(RootType::C, 3);
  PlethysmReport rep;
  rep.which = which;
  rep.subalgebra = R.label();
  rep.defining_highest_weight = defining_weight(R, which);
  rep.defining_dim = weyl_dim(R, rep.defining_highest_weight);
  rep.rho = R.rho();
  const EmbeddingData E = make_embedding(R, irrep_weights(R, rep.defining_highest_weight));
  rep.l = E.l();
  const WeightMultiset plus = restrict_weights(halfspin_weights(rep.l, +1), E);
  const WeightMultiset minus = restrict_weights(halfspin_weights(rep.l, -1), E);
  rep.halfspin_agree = plus == minus;
  rep.plus = identify_irreducible(plus, R);
  rep.minus = rep.halfspin_agree ? rep.plus : identify_irreducible(minus, R);
  return rep;
}

}  // namespace cliffalg
