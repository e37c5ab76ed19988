#pragma once

#include <cliffalg/linalg.hpp>
#include <cliffalg/weights.hpp>

#include <string>
#include <vector>

namespace cliffalg {

enum class RootType { B, C, D, G2, F4 };

/// Root system in a fixed Euclidean realization with exact coordinates:
///   B_l: e_i - e_(i+1), e_l            C_l: e_i - e_(i+1), 2 e_l
///   D_l: e_i - e_(i+1), e_(l-1) + e_l  (in R^l)
///   G2:  e1 - e2, -2e1 + e2 + e3        (in the plane x1 + x2 + x3 = 0 of R^3)
///   F4:  e2 - e3, e3 - e4, e4, (e1 - e2 - e3 - e4)/2   (in R^4)
/// The inner product is the standard dot product of the ambient space.
class RootSystemData {
 public:
  RootSystemData(RootType type, int rank);

  RootType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  int ambient_dim() const noexcept { return ambient_; }
  std::string label() const;

  const std::vector<Weight>& simple_roots() const noexcept { return simple_; }
  const std::vector<Weight>& positive_roots() const noexcept { return positive_; }
  const std::vector<Weight>& fundamental_weights() const noexcept { return fundamental_; }
  const Weight& rho() const noexcept { return rho_; }
  /// A[i][j] = <alpha_i, alpha_j^vee>.
  const Matrix<Rational>& cartan_matrix() const noexcept { return cartan_; }

  Rational inner(const Weight& a, const Weight& b) const;
  /// <w, alpha_i^vee> = 2 (w, alpha_i) / (alpha_i, alpha_i).
  Rational pairing(const Weight& w, int i) const;
  std::vector<Rational> dynkin_labels(const Weight& w) const;
  Weight from_dynkin_labels(const std::vector<Rational>& labels) const;
  /// Coordinates of w in the basis of simple roots (w must lie in their span).
  std::vector<Rational> simple_coordinates(const Weight& w) const;
  /// Sum of the simple-root coordinates, i.e. <w, rho^vee> up to the usual normalization.
  Rational height(const Weight& w) const;

  Weight reflect(const Weight& w, int i) const;
  bool is_dominant(const Weight& w) const;
  bool is_integral(const Weight& w) const;
  Weight dominant_conjugate(const Weight& w) const;
  std::vector<Weight> weyl_orbit(const Weight& w) const;
  /// Highest root.
  Weight highest_root() const;

 private:
  RootType type_;
  int rank_;
  int ambient_;
  std::vector<Weight> simple_;
  std::vector<Rational> simple_norms_;
  std::vector<Weight> positive_;
  std::vector<Weight> fundamental_;
  Weight rho_;
  Matrix<Rational> cartan_;
  Matrix<Rational> gram_inverse_;
};

/// "B3", "C3", "D7", "G2", "F4" (case-insensitive).
RootSystemData parse_root_system(const std::string& label);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator*(const Rational& s, const Weight& w);

}  // namespace cliffalg
