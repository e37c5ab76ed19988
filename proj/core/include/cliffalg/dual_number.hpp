#pragma once

#include <cliffalg/rational.hpp>

#include <string>

namespace cliffalg {

/// a + b*eps with eps^2 = 0, over the rationals. Used to test first-order
/// (tangent) conditions exactly.
struct DualNumber {
  Rational re;
  Rational eps;

  DualNumber() = default;
  DualNumber(int a) : re(a) {}                                           // NOLINT
  DualNumber(const Rational& a) : re(a) {}                               // NOLINT
  DualNumber(Rational a, Rational b) : re(std::move(a)), eps(std::move(b)) {}

  static DualNumber epsilon() { return {Rational(0), Rational(1)}; }

  DualNumber& operator+=(const DualNumber& o) {
    re += o.re;
    eps += o.eps;
    return *this;
  }
  DualNumber& operator-=(const DualNumber& o) {
    re -= o.re;
    eps -= o.eps;
    return *this;
  }
  DualNumber& operator*=(const DualNumber& o) {
    eps = Rational(re * o.eps + eps * o.re);
    re *= o.re;
    return *this;
  }
  DualNumber operator-() const { return {Rational(-re), Rational(-eps)}; }

  friend DualNumber operator+(DualNumber a, const DualNumber& b) { return a += b; }
  friend DualNumber operator-(DualNumber a, const DualNumber& b) { return a -= b; }
  friend DualNumber operator*(DualNumber a, const DualNumber& b) { return a *= b; }
  friend bool operator==(const DualNumber& a, const DualNumber& b) { return a.re == b.re && a.eps == b.eps; }

  std::string to_string() const;
};

inline bool is_zero(const DualNumber& d) { return sgn(d.re) == 0 && sgn(d.eps) == 0; }

}  // namespace cliffalg
