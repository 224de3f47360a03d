#pragma once

#include <vector>

#include "lts/cohomology.hpp"

namespace lts {

// Base system together with the components theta_1..theta_s of a cocycle
// with values in an s-dimensional space V.
struct ExtensionSpec {
  Lts base;
  std::vector<Cocycle> thetas;
};

// T_theta on base + V: [x,y,z] gets theta_t(x,y,z) on the t-th new coordinate
// and V annihilates everything. Throws NotClosed.
Lts extend(const ExtensionSpec& spec);

// (intersection of Rad(theta_t) with Ann(base)) + V, in the coordinates of T_theta.
Subspace extension_annihilator(const ExtensionSpec& spec);

// Intersection of the radicals of all components with Ann(base).
Subspace radical_annihilator_meet(const ExtensionSpec& spec);

bool in_Ts(const ExtensionSpec& spec);
// Throws PreconditionViolated when the radicals meet Ann(base).
bool has_annihilator_component(const ExtensionSpec& spec);

// A with (alpha beta) A = (1 0). Throws ZeroVector.
ScalarMatrix normalize_line_2dim(const Scalar& alpha, const Scalar& beta);

// Components (psi theta)_i = sum_j psi(i,j) theta_j. Throws SingularMatrix.
std::vector<Cocycle> value_action(const ScalarMatrix& psi, const std::vector<Cocycle>& thetas);

}  // namespace lts
