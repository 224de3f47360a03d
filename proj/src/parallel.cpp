#include "lts/parallel.hpp"

#include <omp.h>

#include "lts/random.hpp"

namespace lts {

int worker_threads() { return omp_get_max_threads(); }

Rng::Rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  gen_.seed(seq);
}

Rational Rng::small_rational() {
  std::uniform_int_distribution<int> num(-10, 10), den(1, 10);
  int a = num(gen_);
  int b = den(gen_);
  return Rational(a, b);
}

Rational Rng::small_nonzero_rational() {
  for (;;) {
    Rational r = small_rational();
    if (!r.is_zero()) return r;
  }
}

Scalar Rng::small_scalar() {
  Rational re = small_rational();
  if (std::uniform_int_distribution<int>(0, 1)(gen_) == 0) return Scalar(re);
  return Scalar(re, small_rational());
}

Scalar Rng::small_nonzero_scalar() {
  for (;;) {
    Scalar s = small_scalar();
    if (!s.is_zero()) return s;
  }
}

std::size_t Rng::index(std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(gen_);
}

ScalarMatrix Rng::matrix(std::size_t rows, std::size_t cols) {
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_scalar();
  return m;
}

ScalarMatrix Rng::invertible(std::size_t n) {
  for (;;) {
    ScalarMatrix m = matrix(n, n);
    if (!m.determinant().is_zero()) return m;
  }
}

ScalarMatrix Rng::lower_triangular(std::size_t n) {
  ScalarMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m(i, j) = small_scalar();
    m(i, i) = small_nonzero_scalar();
  }
  return m;
}

}  // namespace lts
