#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cliffalg {

/// Canonical basis blade e_{i1} e_{i2} ... e_{ik} with i1 < ... < ik, stored as a
/// bitmask: generator e_i (1-based) is bit i-1. The empty mask is e_0.
using Blade = std::uint32_t;

inline constexpr int kMaxGenerators = 31;

constexpr int grade(Blade b) noexcept { return std::popcount(b); }
constexpr bool is_even_blade(Blade b) noexcept { return (std::popcount(b) & 1) == 0; }
constexpr Blade generator_blade(int i) noexcept { return Blade{1} << (i - 1); }
constexpr bool contains(Blade b, int i) noexcept { return (b >> (i - 1)) & 1U; }
/// Highest generator index in b (0 for e_0).
constexpr int top_index(Blade b) noexcept { return 32 - std::countl_zero(b); }

Blade blade_of(std::span<const int> indices);
inline Blade blade_of(std::initializer_list<int> indices) {
  return blade_of(std::span<const int>(indices.begin(), indices.size()));
}
std::vector<int> blade_indices(Blade b);
/// "e0", "e1", "e13", ...; indices above 9 are comma separated ("e1,10").
std::string blade_name(Blade b);

/// All blades on m generators ordered by cardinality, then lexicographically
/// on the ascending index lists.
std::vector<Blade> blades_by_grade(int m);
/// Even blades on m generators in the same order.
std::vector<Blade> even_blades(int m);

/// Order used for tensor bases: cardinality first, then lexicographic.
bool graded_lex_less(Blade a, Blade b);

}  // namespace cliffalg
