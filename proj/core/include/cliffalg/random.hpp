#pragma once

#include <cliffalg/linalg.hpp>
#include <cliffalg/multivector.hpp>

#include <cstdint>
#include <random>

namespace cliffalg {

/// Seeded generator for property runs. Draws are reduced with plain modulo so
/// the sequence is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }
  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) { return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (gen_() & 1U) != 0; }
  /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(long num_bound, long den_bound) {
    Rational r(integer(-num_bound, num_bound), integer(1, den_bound));
    r.canonicalize();
    return r;
  }
  Rational nonzero_rational(long num_bound, long den_bound) {
    for (;;) {
      Rational r = rational(num_bound, den_bound);
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 gen_;
};

/// Random symmetric Q with small rational entries.
SpaceQ random_space(Rng& rng, int m, long num_bound = 3, long den_bound = 3);

/// Random symmetric Q of the given corank: P^T D P with D diagonal having
/// exactly `corank` zeros and P an invertible integer matrix.
SpaceQ random_space_with_corank(Rng& rng, int m, int corank);

/// Random element with up to `terms` blades on m generators.
MultivectorQ random_multivector(Rng& rng, int m, int terms, long num_bound = 3, long den_bound = 2);

/// Random vector sum_i c_i e_i.
MultivectorQ random_vector(Rng& rng, int m, long num_bound = 3);

/// Random invertible integer matrix.
Matrix<Rational> random_invertible(Rng& rng, int n, long bound = 2);

}  // namespace cliffalg
