#pragma once

#include <optional>
#include <vector>

#include "lts/polynomial.hpp"

namespace lts {

// Exact square root in Q(i), if one exists.
std::optional<Scalar> sqrt_exact(const Scalar& z);

// Distinct roots in Q(i) of a nonzero polynomial, found by testing every
// quotient of Gaussian-integer divisors of the extreme coefficients. Returns
// nullopt when a coefficient norm cannot be factored by trial division up to
// the built-in bound, so absence of a root is only claimed when the search
// was complete.
std::optional<std::vector<Scalar>> roots_in_field(const Polynomial& p);

}  // namespace lts
