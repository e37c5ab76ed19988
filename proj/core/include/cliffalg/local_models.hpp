#pragma once

#include <cliffalg/linalg.hpp>
#include <cliffalg/spinor.hpp>

#include <string>
#include <utility>
#include <vector>

namespace cliffalg {

using MatrixQ = Matrix<Rational>;

/// g square matrices of a common size n.
struct MatrixTuple {
  int g = 0;
  int n = 0;
  std::vector<MatrixQ> X;

  MatrixTuple() = default;
  MatrixTuple(int n, std::vector<MatrixQ> matrices);

  /// (P X_1 P^-1, ..., P X_g P^-1).
  MatrixTuple conjugated(const MatrixQ& P) const;
  /// Block-diagonal direct sum, generator by generator.
  friend MatrixTuple direct_sum(const MatrixTuple& a, const MatrixTuple& b);
  friend bool operator==(const MatrixTuple&, const MatrixTuple&) = default;
};

MatrixTuple zero_tuple(int g, int n);

struct WordSpan {
  int dim = 0;
  /// Multiplication rounds until the span stopped growing.
  int rounds = 0;
};

/// Span of all words in the X_i (including the empty word), grown by left
/// multiplication until it stabilizes.
WordSpan word_span(const MatrixTuple& T);

/// The word span is all of M_n.
bool generates_full_algebra(const MatrixTuple& T);

/// The words applied to v span k^n.
bool is_cyclic_vector(const MatrixTuple& T, const std::vector<Rational>& v);

/// Traces of all words of length <= L (the empty word included), shortlex order.
struct TraceFingerprint {
  int L = 0;
  int g = 0;
  std::vector<std::pair<std::vector<int>, Rational>> traces;

  friend bool operator==(const TraceFingerprint&, const TraceFingerprint&) = default;
};

/// Words use 1-based generator labels. Throws PreconditionError beyond 2^22 words.
TraceFingerprint trace_fingerprint(const MatrixTuple& T, int L);

/// Fingerprints agree at L (default n^2). Throws DimensionMismatch on shape mismatch.
bool s_equivalent(const MatrixTuple& a, const MatrixTuple& b, int L = 0);

/// dim {Y in span(h) : [Y, X_i] = 0 for all i}. Throws NotInSpan if some X_i
/// is outside span(h).
int centralizer_dim(const MatrixTuple& T, const std::vector<MatrixQ>& h);
/// Basis of the same centralizer.
std::vector<MatrixQ> centralizer_basis(const MatrixTuple& T, const std::vector<MatrixQ>& h);

/// Spin image: each element of L'_q (coordinates on the abar_ij basis) for the
/// split form of W goes to the traceless part of its action on S.
MatrixQ spin_image(const WittDecomposition& W, const std::vector<Rational>& coords);
MatrixTuple spin_image_tuple(const std::vector<std::vector<Rational>>& T, const WittDecomposition& W);

/// Traceless 2x2 basis (H, E, F).
std::vector<MatrixQ> sl2_basis();
/// E_ij (i != j) followed by E_ii - E_nn.
std::vector<MatrixQ> sl_basis(int n);

}  // namespace cliffalg
