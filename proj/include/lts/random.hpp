#pragma once

#include <cstdint>
#include <random>

#include "lts/matrix.hpp"

namespace lts {

// Seeded source of small-height exact values. Numerators lie in [-10, 10]
// and denominators in [1, 10].
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Independent stream for trial number `trial`, so results do not depend on
  // the order trials run in.
  Rng(std::uint64_t seed, std::uint64_t trial);

  Rational small_rational();
  Rational small_nonzero_rational();
  // Gaussian rational whose imaginary part is zero with probability 1/2.
  Scalar small_scalar();
  Scalar small_nonzero_scalar();
  std::size_t index(std::size_t bound);

  ScalarMatrix matrix(std::size_t rows, std::size_t cols);
  // Rejection-sampled invertible matrix.
  ScalarMatrix invertible(std::size_t n);
  // Invertible with g(i,j) = 0 for j > i.
  ScalarMatrix lower_triangular(std::size_t n);

 private:
  std::mt19937_64 gen_;
};

}  // namespace lts
