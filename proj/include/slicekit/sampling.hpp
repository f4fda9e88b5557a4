#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "slicekit/classes.hpp"
#include "slicekit/lie.hpp"

namespace slicekit {

/// Seeded source of random exact data. Identical seeds give identical
/// sequences on every platform (mt19937_64 with integer-only draws).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi);
  /// p/q with |p| <= bound and 1 <= q <= bound.
  Rational rational(long bound = 5);
  RationalMatrix matrix(std::size_t rows, std::size_t cols, long bound = 5);
  /// Product of random unipotent triangular factors and a permutation.
  RationalMatrix invertible(std::size_t n, long bound = 3);
  std::vector<Rational> distinct_rationals(std::size_t k, long bound = 9);
  RationalMatrix element_of(const Subspace& s, long bound = 5);
  /// g c g^{-1} for a random invertible g.
  RationalMatrix conjugate(const RationalMatrix& c, long bound = 3);
  /// Random conjugate of a representative of the label with random distinct
  /// integer eigenvalues (traceless for sl).
  RationalMatrix with_label(const ClassLabel& label, const LieAlgebraSpec& g);
  /// Random conjugate of an upper triangular matrix whose diagonal is drawn
  /// from a small pool, so eigenvalues repeat and Jordan blocks appear.
  RationalMatrix rational_spectrum(std::size_t n, const LieAlgebraSpec& g);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace slicekit
