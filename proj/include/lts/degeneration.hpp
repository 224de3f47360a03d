#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lts/catalog.hpp"
#include "lts/rational_function.hpp"

namespace lts {

using RfMatrix = Matrix<RationalFunction>;

// Rows are the vectors E_i(t) written in the standard basis e_1..e_n.
using ParametrizedBasis = RfMatrix;

ParametrizedBasis parse_basis(const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> basis_strings(const ParametrizedBasis& b);

// Constants of mu in the basis E(t): mu(E_i,E_j,E_k) = sum_p w_ijk^p E_p.
// Throws SingularBasis when det E(t) is identically zero.
std::vector<RationalFunction> transport_constants(std::size_t n, const std::vector<RationalFunction>& c,
                                                  const ParametrizedBasis& basis);
std::vector<RationalFunction> lift_constants(const Lts& T);

// A catalog system: a fixed entry, a family member at a constant lambda, or
// (source only) the family with lambda = f(t).
struct SystemRef {
  std::string name;
  std::optional<Scalar> lambda;
  std::optional<RationalFunction> indexFn;
  std::string label() const;
};

struct DegenerationWitness {
  SystemRef source;
  SystemRef target;
  ParametrizedBasis basis;
  std::string label() const { return source.label() + " -> " + target.label(); }
};

struct DegenerationCheck {
  bool pass = false;
  std::vector<std::string> poles;       // "c(1,2,3;4)" entries without a limit
  std::vector<std::string> mismatches;  // entries whose limit differs from the target
  std::vector<Scalar> limit;            // empty when some entry has a pole
  std::string to_string() const;
};

// Source constants as rational functions of t; throws PreconditionViolated
// for an index function on a fixed entry.
std::vector<RationalFunction> source_constants(const SystemRef& s);

DegenerationCheck verify_degeneration(const DegenerationWitness& w);

// Same witness with the target replaced by its image under g, where
// change_basis(target, g) is the new target system.
DegenerationWitness retarget(const DegenerationWitness& w, const ScalarMatrix& g, const SystemRef& target);

struct NecessaryCondition {
  std::string invariant;  // "dim Der", "dim Ann", "dim T^(1)"
  std::size_t source = 0;
  std::size_t target = 0;
  bool holds = false;
};

struct NecessaryReport {
  bool consistent = true;
  // Equal fingerprints; A -> B could then be the trivial degeneration, so the
  // strict Der inequality is not required.
  bool sameFingerprint = false;
  std::vector<NecessaryCondition> conditions;
  std::string to_string() const;
};

// Invariant inequalities every degeneration a -> b satisfies. With
// fromFamily, a is a generic member of a one-parameter family degenerating
// as a whole, whose closure is one dimension larger than the orbit of a, so
// dim Der need only be non-decreasing.
NecessaryReport necessary_conditions(const Lts& a, const Lts& b, bool fromFamily = false);

// The thirteen tabulated dimension-4 degenerations; the T4,6 -> T4,4 row is
// instantiated at `lambda` (throws SingularParameter for 1, -2, -1/2).
std::vector<DegenerationWitness> known_degenerations(const Scalar& lambda = Scalar(2));
DegenerationWitness family_to_t44(const Scalar& lambda);
// T4,6 with lambda = 2/(1+t) - 1 degenerating to T4,5.
DegenerationWitness family_to_t45();
// T3,2 -> T3,1 by scaling.
DegenerationWitness t32_to_t31();

}  // namespace lts
