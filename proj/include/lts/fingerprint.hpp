#pragma once

#include <optional>
#include <string>

#include "lts/lts.hpp"

namespace lts {

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dimAnn = 0;
  std::size_t dimDerived = 0;
  std::size_t dimDer = 0;
  int nilpotencyIndex = 0;  // -1 when the system is not nilpotent
  std::size_t dimZ3 = 0;
  std::size_t dimH3 = 0;
  std::optional<Scalar> familyXi;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const Lts& T);

// Data behind familyXi: for dim 4 with a one-dimensional derived algebra L
// inside Ann, the cocycle of T/L written as a 3x3 A_theta, plus the basis
// (three standard complement vectors followed by the generator of L) it is
// expressed in. Empty when the shape does not apply.
struct QuotientCocycle {
  ScalarMatrix basis;  // columns are the basis vectors
  ScalarMatrix a;
};
std::optional<QuotientCocycle> quotient_cocycle(const Lts& T);

// -e2^3 / e3^2 from the elementary symmetric functions of A_theta.
std::optional<Scalar> family_xi(const Lts& T);

}  // namespace lts
