#include <cliffalg/json_io.hpp>

#include <algorithm>

namespace cliffalg::json_io {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}

std::string blade_key(Blade b) {
  std::string s = "[";
  const auto idx = blade_indices(b);
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "]";
}

Blade blade_from_key(const std::string& key) {
  json idx;
  try {
    idx = json::parse(key);
  } catch (const json::parse_error&) {
    throw ParseError("multivector key \"" + key + "\" is not an index list");
  }
  expect(idx.is_array(), "multivector key \"" + key + "\" is not an index list");
  std::vector<int> v;
  for (const auto& e : idx) {
    expect(e.is_number_integer(), "multivector key \"" + key + "\" has a non-integer index");
    const int i = e.get<int>();
    expect(i >= 1 && i <= 32, "multivector key \"" + key + "\" has an index outside 1..32");
    expect(v.empty() || v.back() < i, "multivector key \"" + key + "\" must list strictly increasing indices");
    v.push_back(i);
  }
  return blade_of(v);
}

template <class T, class F>
std::vector<std::vector<T>> square_from_json(const json& j, int m, F&& entry) {
  expect(j.is_array() && static_cast<int>(j.size()) == m, "\"Q\" must have m rows");
  std::vector<std::vector<T>> g;
  for (const auto& row : j) {
    expect(row.is_array() && static_cast<int>(row.size()) == m, "\"Q\" must be square");
    std::vector<T> r;
    for (const auto& e : row) r.push_back(entry(e));
    g.push_back(std::move(r));
  }
  return g;
}

int int_field(const json& j, const char* name) {
  expect(j.is_object() && j.contains(name) && j.at(name).is_number_integer(),
         std::string("missing integer field \"") + name + "\"");
  return j.at(name).get<int>();
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  expect(j.is_string(), "expected a rational as a \"p/q\" string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

json to_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_json(c));
  return a;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) return Polynomial(rational_from_json(j));
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(rational_from_json(e));
  return Polynomial(std::move(c));
}

json to_json(const RationalFunction& f) {
  return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}};
}

RationalFunction rational_function_from_json(const json& j) {
  if (j.is_object()) {
    expect(j.contains("num") && j.contains("den"), "rational function needs \"num\" and \"den\"");
    const Polynomial den = polynomial_from_json(j.at("den"));
    expect(!den.is_zero(), "rational function with zero denominator");
    return RationalFunction(polynomial_from_json(j.at("num")), den);
  }
  return RationalFunction(polynomial_from_json(j));
}

json to_json(const SpaceQ& V) {
  json Q = json::array();
  for (const auto& row : V.gram()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    Q.push_back(r);
  }
  return {{"m", V.dim()}, {"Q", Q}};
}

SpaceQ space_from_json(const json& j) {
  const int m = int_field(j, "m");
  expect(m >= 0 && m <= 32, "\"m\" must be in 0..32");
  expect(j.contains("Q"), "missing field \"Q\"");
  auto g = square_from_json<Rational>(j.at("Q"), m, rational_from_json);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < a; ++b)
      expect(g[a][b] == g[b][a], "\"Q\" must be symmetric");
  return SpaceQ(m, std::move(g));
}

json to_json(const QuadraticFamily& F) {
  json Q = json::array();
  for (const auto& row : F.gram()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    Q.push_back(r);
  }
  return {{"m", F.dim()}, {"Q", Q}};
}

QuadraticFamily family_from_json(const json& j) {
  const int m = int_field(j, "m");
  expect(m >= 0 && m <= 16, "\"m\" must be in 0..16");
  expect(j.contains("Q"), "missing field \"Q\"");
  auto g = square_from_json<RationalFunction>(j.at("Q"), m, rational_function_from_json);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < a; ++b)
      expect(g[a][b] == g[b][a], "\"Q\" must be symmetric");
  return QuadraticFamily(m, std::move(g));
}

json to_json(const MultivectorQ& x) {
  json o = json::object();
  for (const auto& [b, c] : x.terms()) o[blade_key(b)] = to_json(c);
  return o;
}

MultivectorQ multivector_from_json(const json& j) {
  expect(j.is_object(), "a multivector is an object mapping index lists to coefficients");
  MultivectorQ x;
  for (const auto& [k, v] : j.items()) x += MultivectorQ::blade(blade_from_key(k), rational_from_json(v));
  return x;
}

json to_json(const AlgebraTensor<Rational>& T) {
  json c = json::array();
  for (const auto& [idx, v] : T.c) c.push_back({idx[0], idx[1], idx[2], to_json(v)});
  json o{{"dim", T.dim}, {"identity", T.identity}, {"c", c}};
  if (!T.basis.empty()) {
    json b = json::array();
    for (Blade x : T.basis) b.push_back(json::parse(blade_key(x)));
    o["basis"] = b;
  }
  return o;
}

AlgebraTensor<Rational> tensor_from_json(const json& j) {
  AlgebraTensor<Rational> T;
  T.dim = int_field(j, "dim");
  T.identity = int_field(j, "identity");
  expect(T.dim >= 1 && T.dim <= 4096, "\"dim\" must be in 1..4096");
  expect(T.identity >= 0 && T.identity < T.dim, "\"identity\" out of range");
  expect(j.contains("c") && j.at("c").is_array(), "missing array field \"c\"");
  for (const auto& e : j.at("c")) {
    expect(e.is_array() && e.size() == 4, "each constant is [i, j, k, coefficient]");
    std::array<int, 3> idx{};
    for (int a = 0; a < 3; ++a) {
      expect(e[a].is_number_integer(), "tensor indices must be integers");
      idx[a] = e[a].get<int>();
      expect(idx[a] >= 0 && idx[a] < T.dim, "tensor index out of range");
    }
    T.add(idx[0], idx[1], idx[2], rational_from_json(e[3]));
  }
  if (j.contains("basis"))
    for (const auto& b : j.at("basis")) T.basis.push_back(blade_from_key(b.dump()));
  return T;
}

json to_json(const Weight& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(to_json(x));
  return a;
}

json to_json(const WeightMultiset& W) {
  json a = json::array();
  for (const auto& [w, k] : W.counts()) a.push_back({{"weight", to_json(w)}, {"multiplicity", k}});
  return a;
}

WeightMultiset weights_from_json(const json& j) {
  expect(j.is_array(), "weights must be an array");
  WeightMultiset W;
  for (const auto& e : j) {
    expect(e.is_object() && e.contains("weight"), "each entry needs a \"weight\"");
    Weight w;
    for (const auto& x : e.at("weight")) w.push_back(rational_from_json(x));
    const long long k = e.contains("multiplicity") ? e.at("multiplicity").get<long long>() : 1;
    expect(k > 0, "multiplicities must be positive");
    W.add(w, k);
  }
  return W;
}

json to_json(const MatrixQ& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int k = 0; k < m.cols(); ++k) r.push_back(to_json(m(i, k)));
    rows.push_back(r);
  }
  return rows;
}

MatrixQ matrix_from_json(const json& j) {
  expect(j.is_array(), "a matrix is an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    expect(r.is_array(), "a matrix row must be an array");
    std::vector<Rational> row;
    for (const auto& e : r) row.push_back(rational_from_json(e));
    rows.push_back(std::move(row));
  }
  try {
    return MatrixQ::from_rows(rows);
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

json to_json(const MatrixTuple& T) {
  json X = json::array();
  for (const auto& m : T.X) X.push_back(to_json(m));
  return {{"g", T.g}, {"n", T.n}, {"X", X}};
}

MatrixTuple tuple_from_json(const json& j) {
  const int g = int_field(j, "g");
  const int n = int_field(j, "n");
  expect(n >= 1 && n <= 64 && g >= 0 && g <= 64, "\"g\" or \"n\" out of range");
  expect(j.contains("X") && j.at("X").is_array() && static_cast<int>(j.at("X").size()) == g,
         "\"X\" must hold g matrices");
  std::vector<MatrixQ> X;
  for (const auto& m : j.at("X")) {
    X.push_back(matrix_from_json(m));
    expect(X.back().rows() == n && X.back().cols() == n, "every matrix in \"X\" must be n x n");
  }
  return MatrixTuple(n, std::move(X));
}

json to_json(const TraceFingerprint& fp) {
  json t = json::array();
  for (const auto& [w, tr] : fp.traces) t.push_back({{"word", w}, {"trace", to_json(tr)}});
  return {{"L", fp.L}, {"g", fp.g}, {"traces", t}};
}

json to_json(const LipschitzVerdict& v) {
  return {{"homogeneous", v.homogeneous},
          {"cl0_member", v.cl0_member},
          {"norm_scalar", v.norm_scalar ? to_json(*v.norm_scalar) : json(nullptr)},
          {"verdict", v.verdict}};
}

json to_json(const RadicalReport& r) {
  json basis = json::array();
  for (const auto& v : r.basis) basis.push_back(to_json(Weight(v)));
  return {{"algebra_dim", r.algebra_dim},
          {"radical_dim", r.dim()},
          {"radical_basis", basis},
          {"is_ideal", r.is_ideal},
          {"is_nil", r.is_nil},
          {"nilpotency_index", r.nilpotency_index}};
}

json to_json(const SpecializationWitness& w) {
  const json rad = to_json(w.radical);
  return {{"m", w.m},
          {"det", to_json(w.det)},
          {"generic_semisimple", w.generic_semisimple},
          {"fibers_free", w.fibers_free},
          {"fiber_dim", w.fiber_dim},
          {"special_fiber", to_json(w.special_fiber)},
          {"radical_dim", rad.at("radical_dim")},
          {"radical_basis", rad.at("radical_basis")},
          {"radical_is_ideal", w.radical.is_ideal},
          {"radical_is_nil", w.radical.is_nil},
          {"nilpotency_index", w.radical.nilpotency_index},
          {"valid", w.valid()}};
}

json to_json(const Decomposition& d) {
  json a = json::array();
  for (const auto& c : d.constituents)
    a.push_back({{"highest_weight", to_json(c.highest_weight)},
                 {"dynkin_labels", to_json(Weight(c.dynkin_labels))},
                 {"dim", c.dim.fits_slong_p() ? json(c.dim.get_si()) : json(c.dim.get_str())},
                 {"multiplicity", c.multiplicity}});
  return a;
}

}  // namespace cliffalg::json_io
