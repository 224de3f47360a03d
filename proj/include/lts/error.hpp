#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lts {

enum class Errc {
  DivisionByZero,
  PoleAtZero,
  PoleAtPoint,
  Parse,
  InconsistentTable,
  AxiomViolation,
  DimensionMismatch,
  SingularMatrix,
  NotALieAlgebra,
  NotAnAutomorphism,
  NotAbelianDim3,
  RelationViolated,
  NotClosed,
  PreconditionViolated,
  ZeroVector,
  UnknownName,
  MissingParameter,
  SingularParameter,
  NotNilpotent,
  DimensionUnsupported,
  NoMatch,
  SingularBasis,
  InconsistentGraph,
  FieldRestriction,
};

std::string_view errc_name(Errc e) noexcept;

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(Errc kind, const std::string& what)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind) {}

  Errc kind() const noexcept { return kind_; }

 private:
  Errc kind_;
};

}  // namespace lts
