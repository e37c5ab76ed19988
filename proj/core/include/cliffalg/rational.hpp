#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliffalg {

/// Exact rational number in lowest terms (GMP).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Parses "p", "p/q" or "-p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

}  // namespace cliffalg
