#include <cliffalg/root_system.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace cliffalg {

Weight operator+(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DimensionMismatch("weight lengths differ");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw DimensionMismatch("weight lengths differ");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Weight operator*(const Rational& s, const Weight& w) {
  Weight r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = s * w[i];
  return r;
}

namespace {

Weight basis_vector(int n, int i, const Rational& c = 1) {
  Weight w(n);
  w[i] = c;
  return w;
}

std::vector<Weight> simple_roots_of(RootType type, int l, int& ambient) {
  std::vector<Weight> s;
  switch (type) {
    case RootType::B:
    case RootType::C:
    case RootType::D:
      ambient = l;
      for (int i = 0; i + 1 < l; ++i) s.push_back(basis_vector(l, i) - basis_vector(l, i + 1));
      if (type == RootType::B) s.push_back(basis_vector(l, l - 1));
      if (type == RootType::C) s.push_back(basis_vector(l, l - 1, 2));
      if (type == RootType::D) {
        if (l < 2) throw PreconditionError("D_l needs l >= 2");
        s.push_back(basis_vector(l, l - 2) + basis_vector(l, l - 1));
      }
      return s;
    case RootType::G2:
      ambient = 3;
      s.push_back({Rational(1), Rational(-1), Rational(0)});
      s.push_back({Rational(-2), Rational(1), Rational(1)});
      return s;
    case RootType::F4:
      ambient = 4;
      s.push_back({Rational(0), Rational(1), Rational(-1), Rational(0)});
      s.push_back({Rational(0), Rational(0), Rational(1), Rational(-1)});
      s.push_back({Rational(0), Rational(0), Rational(0), Rational(1)});
      s.push_back({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
      return s;
  }
  throw PreconditionError("unknown root type");
}

}  // namespace

RootSystemData::RootSystemData(RootType type, int rank) : type_(type), rank_(rank), ambient_(0) {
  if (type == RootType::G2 && rank != 2) throw PreconditionError("G2 has rank 2");
  if (type == RootType::F4 && rank != 4) throw PreconditionError("F4 has rank 4");
  if (rank < 1) throw PreconditionError("rank must be positive");
  simple_ = simple_roots_of(type, rank, ambient_);
  for (const auto& a : simple_) simple_norms_.push_back(inner(a, a));

  Matrix<Rational> G(rank_, rank_);
  cartan_ = Matrix<Rational>(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      G(i, j) = inner(simple_[i], simple_[j]);
      cartan_(i, j) = pairing(simple_[i], j);
    }
  // Inverse Gram via solving against the identity.
  gram_inverse_ = Matrix<Rational>(rank_, rank_);
  for (int j = 0; j < rank_; ++j) {
    std::vector<Rational> e(rank_);
    e[j] = 1;
    const auto col = solve(G, e);
    if (!col) throw std::logic_error("simple roots are linearly dependent");
    for (int i = 0; i < rank_; ++i) gram_inverse_(i, j) = (*col)[i];
  }

  // Roots: closure of the simple roots under simple reflections.
  std::set<Weight> roots(simple_.begin(), simple_.end());
  std::vector<Weight> frontier(simple_.begin(), simple_.end());
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& r : frontier)
      for (int i = 0; i < rank_; ++i) {
        Weight s = reflect(r, i);
        if (roots.insert(s).second) next.push_back(std::move(s));
      }
    frontier.swap(next);
  }
  for (const auto& r : roots) {
    const auto c = simple_coordinates(r);
    if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x >= 0; })) positive_.push_back(r);
  }
  rho_ = Weight(ambient_);
  for (const auto& r : positive_) rho_ = rho_ + r;
  rho_ = Rational(1, 2) * rho_;

  // omega_i = sum_j X[i][j] alpha_j with X A = I.
  for (int i = 0; i < rank_; ++i) {
    std::vector<Rational> labels(rank_);
    labels[i] = 1;
    fundamental_.push_back(from_dynkin_labels(labels));
  }
}

std::string RootSystemData::label() const {
  switch (type_) {
    case RootType::B:
      return "B" + std::to_string(rank_);
    case RootType::C:
      return "C" + std::to_string(rank_);
    case RootType::D:
      return "D" + std::to_string(rank_);
    case RootType::G2:
      return "G2";
    case RootType::F4:
      return "F4";
  }
  return "?";
}

Rational RootSystemData::inner(const Weight& a, const Weight& b) const {
  if (a.size() != b.size()) throw DimensionMismatch("weight lengths differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational RootSystemData::pairing(const Weight& w, int i) const { return 2 * inner(w, simple_[i]) / simple_norms_[i]; }

std::vector<Rational> RootSystemData::dynkin_labels(const Weight& w) const {
  std::vector<Rational> r(rank_);
  for (int i = 0; i < rank_; ++i) r[i] = pairing(w, i);
  return r;
}

Weight RootSystemData::from_dynkin_labels(const std::vector<Rational>& labels) const {
  if (static_cast<int>(labels.size()) != rank_) throw DimensionMismatch("need one label per simple root");
  // Solve A^T c = labels for the simple-root coordinates c.
  const auto c = solve(cartan_.transpose(), labels);
  if (!c) throw std::logic_error("singular Cartan matrix");
  Weight w(ambient_);
  for (int j = 0; j < rank_; ++j) w = w + (*c)[j] * simple_[j];
  return w;
}

std::vector<Rational> RootSystemData::simple_coordinates(const Weight& w) const {
  std::vector<Rational> p(rank_);
  for (int j = 0; j < rank_; ++j) p[j] = inner(w, simple_[j]);
  std::vector<Rational> c = gram_inverse_ * p;
  Weight back(ambient_);
  for (int j = 0; j < rank_; ++j) back = back + c[j] * simple_[j];
  if (back != w) throw PreconditionError("weight is not in the span of the simple roots");
  return c;
}

Rational RootSystemData::height(const Weight& w) const {
  Rational h = 0;
  for (const auto& c : simple_coordinates(w)) h += c;
  return h;
}

Weight RootSystemData::reflect(const Weight& w, int i) const { return w - pairing(w, i) * simple_[i]; }

bool RootSystemData::is_dominant(const Weight& w) const {
  for (int i = 0; i < rank_; ++i)
    if (pairing(w, i) < 0) return false;
  return true;
}

bool RootSystemData::is_integral(const Weight& w) const {
  for (int i = 0; i < rank_; ++i)
    if (pairing(w, i).get_den() != 1) return false;
  return true;
}

Weight RootSystemData::dominant_conjugate(const Weight& w) const {
  Weight cur = w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < rank_; ++i)
      if (pairing(cur, i) < 0) {
        cur = reflect(cur, i);
        changed = true;
      }
  }
  return cur;
}

std::vector<Weight> RootSystemData::weyl_orbit(const Weight& w) const {
  std::set<Weight> seen{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& x : frontier)
      for (int i = 0; i < rank_; ++i) {
        Weight y = reflect(x, i);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier.swap(next);
  }
  return {seen.begin(), seen.end()};
}

Weight RootSystemData::highest_root() const {
  Weight best = positive_.front();
  for (const auto& r : positive_)
    if (height(r) > height(best)) best = r;
  return best;
}

RootSystemData parse_root_system(const std::string& label) {
  std::string s;
  for (char ch : label) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "G2") return RootSystemData(RootType::G2, 2);
  if (s == "F4") return RootSystemData(RootType::F4, 4);
  if (s.size() >= 2 && (s[0] == 'B' || s[0] == 'C' || s[0] == 'D')) {
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad root system label \"" + label + "\"");
      rank = rank * 10 + (s[i] - '0');
      if (rank > 64) throw ParseError("rank too large in \"" + label + "\"");
    }
    const RootType t = s[0] == 'B' ? RootType::B : s[0] == 'C' ? RootType::C : RootType::D;
    return RootSystemData(t, rank);
  }
  throw ParseError("unknown root system \"" + label + "\"");
}

}  // namespace cliffalg
