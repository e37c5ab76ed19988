#pragma once

#include <cliffalg/dual_number.hpp>
#include <cliffalg/polynomial.hpp>
#include <cliffalg/rational.hpp>
#include <cliffalg/rational_function.hpp>

#include <concepts>
#include <optional>
#include <string>
#include <string_view>

namespace cliffalg {

/// Exact commutative coefficient ring. No floating point type satisfies the
/// library's expectations (is_zero must be exact).
template <class R>
concept CoefficientRing = std::regular<R> && requires(const R& a, const R& b) {
  { R(a + b) };
  { R(a - b) };
  { R(a * b) };
  { R(-a) };
  { is_zero(a) } -> std::convertible_to<bool>;
  { R(0) };
  { R(1) };
};

/// Coefficient rings that are fields (exact division available).
template <class F>
concept ExactField = CoefficientRing<F> && requires(const F& a, const F& b) {
  { F(a / b) };
};

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr std::string_view name = "rational";
  using Field = Rational;
};
template <>
struct RingTraits<Polynomial> {
  static constexpr std::string_view name = "polynomial";
  using Field = RationalFunction;
};
template <>
struct RingTraits<RationalFunction> {
  static constexpr std::string_view name = "rational-function";
  using Field = RationalFunction;
};
template <>
struct RingTraits<DualNumber> {
  static constexpr std::string_view name = "dual";
};

inline std::string coefficient_string(const Rational& x) { return to_string(x); }
inline std::string coefficient_string(const Polynomial& x) { return x.to_string(); }
inline std::string coefficient_string(const RationalFunction& x) { return x.to_string(); }
inline std::string coefficient_string(const DualNumber& x) { return x.to_string(); }

/// Value at t = c, or nullopt at a pole.
inline std::optional<Rational> specialize_coefficient(const Rational& x, const Rational&) { return x; }
inline std::optional<Rational> specialize_coefficient(const Polynomial& x, const Rational& c) {
  return x.evaluate(c);
}
inline std::optional<Rational> specialize_coefficient(const RationalFunction& x, const Rational& c) {
  if (!x.regular_at(c)) return std::nullopt;
  return x.evaluate(c);
}

template <class R>
concept ParametricRing = std::same_as<R, Polynomial> || std::same_as<R, RationalFunction>;

inline bool regular_at(const Rational&, const Rational&) { return true; }
inline bool regular_at(const Polynomial&, const Rational&) { return true; }
inline bool regular_at(const RationalFunction& x, const Rational& c) { return x.regular_at(c); }

}  // namespace cliffalg
