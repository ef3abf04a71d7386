#pragma once

#include <cstdint>

#include "jetop/diff_operator.hpp"
#include "jetop/polynomial.hpp"
#include "jetop/rational.hpp"

namespace jetop {

/// SplitMix64: tiny, portable, bit-exact across platforms. Reports quote the
/// seed, so every randomized check replays identically everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); unbiased enough for test-data generation.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Random p/q with |p/q| <= max_abs and denominator <= max_den.
Rational random_rational(SplitMix64& rng, int max_abs = 5, int max_den = 4);

/// Nonzero variant of random_rational.
Rational random_nonzero_rational(SplitMix64& rng, int max_abs = 5, int max_den = 4);

/// Random polynomial of degree <= max_degree with rational coefficients in
/// [-max_abs, max_abs]; roughly `terms` nonzero monomials.
Polynomial<Rational> random_polynomial(SplitMix64& rng, int dim, int max_degree, int terms = 3,
                                       int max_abs = 5);

/// Polynomial flat to order `flat_order` at 0: every monomial has degree
/// >= flat_order + 1 (so all derivatives of order <= flat_order vanish at 0).
Polynomial<Rational> random_flat_polynomial(SplitMix64& rng, int dim, int flat_order,
                                            int extra_degree = 2, int terms = 3, int max_abs = 5);

/// Random operator of order <= max_order with random polynomial
/// coefficients. `min_order` forces at least one nonzero coefficient of that
/// degree or higher (0 allows the pure-multiplication case; the result is
/// never the zero operator).
DiffOperator random_operator(SplitMix64& rng, int dim, int max_order, int min_order = 0,
                             int coeff_degree = 2, int max_abs = 5);

}  // namespace jetop
