#include <cliffalg/lie_structure.hpp>
#include <cliffalg/local_models.hpp>

#include <algorithm>

namespace cliffalg {

namespace {

SparseVector flatten(const MatrixQ& m) {
  SparseVector v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) v[static_cast<std::uint32_t>(i * m.cols() + j)] = m(i, j);
  return v;
}

SparseVector sparse(const std::vector<Rational>& x) {
  SparseVector v;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_zero(x[i])) v[static_cast<std::uint32_t>(i)] = x[i];
  return v;
}

void check_square(const MatrixQ& m, int n) {
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
}

}  // namespace

MatrixTuple::MatrixTuple(int size, std::vector<MatrixQ> matrices)
    : g(static_cast<int>(matrices.size())), n(size), X(std::move(matrices)) {
  if (n < 1) throw PreconditionError("matrix size must be positive");
  for (const auto& m : X) check_square(m, n);
}

MatrixTuple MatrixTuple::conjugated(const MatrixQ& P) const {
  check_square(P, n);
  const auto Pinv = inverse(P);
  if (!Pinv) throw PreconditionError("conjugating matrix is singular");
  std::vector<MatrixQ> out;
  for (const auto& m : X) out.push_back(P * m * *Pinv);
  return MatrixTuple(n, std::move(out));
}

MatrixTuple direct_sum(const MatrixTuple& a, const MatrixTuple& b) {
  if (a.g != b.g) throw DimensionMismatch("direct sum needs the same number of generators");
  std::vector<MatrixQ> out;
  for (int k = 0; k < a.g; ++k) {
    MatrixQ m(a.n + b.n, a.n + b.n);
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) m(i, j) = a.X[k](i, j);
    for (int i = 0; i < b.n; ++i)
      for (int j = 0; j < b.n; ++j) m(a.n + i, a.n + j) = b.X[k](i, j);
    out.push_back(std::move(m));
  }
  return MatrixTuple(a.n + b.n, std::move(out));
}

MatrixTuple zero_tuple(int g, int n) { return MatrixTuple(n, std::vector<MatrixQ>(g, MatrixQ(n, n))); }

WordSpan word_span(const MatrixTuple& T) {
  SparseSpan span;
  std::vector<MatrixQ> fresh;
  const auto add = [&](const MatrixQ& m) {
    if (span.insert(flatten(m))) fresh.push_back(m);
  };
  add(MatrixQ::identity(T.n));
  for (const auto& x : T.X) add(x);
  WordSpan r;
  while (!fresh.empty()) {
    std::vector<MatrixQ> last;
    last.swap(fresh);
    for (const auto& x : T.X)
      for (const auto& m : last) add(x * m);
    if (!fresh.empty()) ++r.rounds;
  }
  r.dim = span.dim();
  return r;
}

bool generates_full_algebra(const MatrixTuple& T) { return word_span(T).dim == T.n * T.n; }

bool is_cyclic_vector(const MatrixTuple& T, const std::vector<Rational>& v) {
  if (static_cast<int>(v.size()) != T.n) throw DimensionMismatch("vector length differs from matrix size");
  SparseSpan span;
  std::vector<std::vector<Rational>> fresh;
  const auto add = [&](const std::vector<Rational>& w) {
    if (span.insert(sparse(w))) fresh.push_back(w);
  };
  add(v);
  while (!fresh.empty()) {
    std::vector<std::vector<Rational>> last;
    last.swap(fresh);
    for (const auto& x : T.X)
      for (const auto& w : last) add(x * w);
  }
  return span.dim() == T.n;
}

TraceFingerprint trace_fingerprint(const MatrixTuple& T, int L) {
  if (L < 0) throw PreconditionError("word length bound must be nonnegative");
  double count = 1, layer = 1;
  for (int k = 0; k < L; ++k) count += (layer *= std::max(T.g, 1));
  if (count > double(1 << 22)) throw PreconditionError("too many words for the trace fingerprint");
  TraceFingerprint fp;
  fp.L = L;
  fp.g = T.g;
  // Length-by-length, each layer in lexicographic order: shortlex overall.
  std::vector<std::pair<std::vector<int>, MatrixQ>> layer_words{{{}, MatrixQ::identity(T.n)}};
  for (int len = 0;; ++len) {
    for (const auto& [w, m] : layer_words) fp.traces.emplace_back(w, m.trace());
    if (len == L || T.g == 0) break;
    std::vector<std::pair<std::vector<int>, MatrixQ>> next;
    next.reserve(layer_words.size() * T.g);
    for (const auto& [w, m] : layer_words)
      for (int k = 0; k < T.g; ++k) {
        std::vector<int> w2 = w;
        w2.push_back(k + 1);
        next.emplace_back(std::move(w2), m * T.X[k]);
      }
    layer_words.swap(next);
  }
  return fp;
}

bool s_equivalent(const MatrixTuple& a, const MatrixTuple& b, int L) {
  if (a.g != b.g || a.n != b.n) throw DimensionMismatch("tuples have different shapes");
  if (L <= 0) L = a.n * a.n;
  return trace_fingerprint(a, L) == trace_fingerprint(b, L);
}

std::vector<MatrixQ> centralizer_basis(const MatrixTuple& T, const std::vector<MatrixQ>& h) {
  for (const auto& m : h) check_square(m, T.n);
  // Basis of span(h).
  SparseSpan span;
  std::vector<MatrixQ> basis;
  for (const auto& m : h)
    if (span.insert(flatten(m))) basis.push_back(m);
  for (int i = 0; i < T.g; ++i)
    if (!span.reduce(flatten(T.X[i])).empty())
      throw NotInSpan("generator X_" + std::to_string(i + 1) + " is not in the span of h");
  const int d = static_cast<int>(basis.size());
  if (d == 0) return {};
  const int n2 = T.n * T.n;
  MatrixQ system(std::max(1, T.g) * n2, d);
  for (int i = 0; i < T.g; ++i)
    for (int k = 0; k < d; ++k) {
      const MatrixQ c = commutator(basis[k], T.X[i]);
      for (int r = 0; r < T.n; ++r)
        for (int s = 0; s < T.n; ++s) system(i * n2 + r * T.n + s, k) = c(r, s);
    }
  std::vector<MatrixQ> out;
  for (const auto& coeffs : kernel(system)) {
    MatrixQ Y(T.n, T.n);
    for (int k = 0; k < d; ++k)
      if (!is_zero(coeffs[k])) Y += coeffs[k] * basis[k];
    out.push_back(std::move(Y));
  }
  return out;
}

int centralizer_dim(const MatrixTuple& T, const std::vector<MatrixQ>& h) {
  return static_cast<int>(centralizer_basis(T, h).size());
}

MatrixQ spin_image(const WittDecomposition& W, const std::vector<Rational>& coords) {
  const int m = W.dim();
  const auto labels = detail::pair_labels(m);
  if (coords.size() != labels.size())
    throw NotInSpan("element has " + std::to_string(coords.size()) + " coordinates, L'_q has dimension " +
                    std::to_string(labels.size()));
  MultivectorQ x;
  for (std::size_t a = 0; a < labels.size(); ++a)
    if (!is_zero(coords[a])) x += MultivectorQ::blade(blade_of({labels[a].first, labels[a].second}), coords[a]);
  MatrixQ r = action_matrix(W, x);
  const Rational shift = r.trace() / r.rows();
  for (int i = 0; i < r.rows(); ++i) r(i, i) -= shift;
  return r;
}

MatrixTuple spin_image_tuple(const std::vector<std::vector<Rational>>& T, const WittDecomposition& W) {
  std::vector<MatrixQ> out;
  for (const auto& x : T) out.push_back(spin_image(W, x));
  return MatrixTuple(1 << W.rank(), std::move(out));
}

std::vector<MatrixQ> sl_basis(int n) {
  std::vector<MatrixQ> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        MatrixQ e(n, n);
        e(i, j) = 1;
        out.push_back(std::move(e));
      }
  for (int i = 0; i + 1 < n; ++i) {
    MatrixQ h(n, n);
    h(i, i) = 1;
    h(n - 1, n - 1) = -1;
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<MatrixQ> sl2_basis() {
  MatrixQ H(2, 2), E(2, 2), F(2, 2);
  H(0, 0) = 1;
  H(1, 1) = -1;
  E(0, 1) = 1;
  F(1, 0) = 1;
  return {H, E, F};
}

}  // namespace cliffalg
