#pragma once

#include <string_view>

#include "lts/gaussian.hpp"
#include "lts/rational_function.hpp"

namespace lts {

// Recursive-descent parser for arithmetic over Q(i)(t): integers, i, t,
// + - * / ^ and parentheses. Exponents must be integer constants.
// Errors are reported as Errc::Parse with the offending position.
RationalFunction parse_rational_function(std::string_view text);
// Same grammar without t.
Scalar parse_scalar(std::string_view text);

}  // namespace lts
