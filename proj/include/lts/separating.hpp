#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lts/degeneration.hpp"
#include "lts/random.hpp"

namespace lts {

// c(lhs) = factor * c(rhs), slots written 1-based as (i,j,k,p).
struct SlotRelation {
  std::array<int, 4> lhs;
  std::array<int, 4> rhs;
  Scalar factor;
};

// Linear subset of structure-constant space: the listed relations hold and,
// when zeroOtherwise is set, every slot not named in a relation vanishes.
struct SeparatingSet {
  std::string name;
  std::size_t dim = 0;
  std::vector<SlotRelation> equal;
  bool zeroOtherwise = true;

  // 0-based flat slots named by some relation, sorted.
  std::vector<std::size_t> listed_slots() const;
  // Rows are linear forms whose common zero set is the set.
  ScalarMatrix relation_matrix() const;
  std::string to_string() const;
};

bool separating_contains(const SeparatingSet& R, const std::vector<Scalar>& c);
bool separating_contains(const SeparatingSet& R, const Lts& T);
// Basis of the set as a subspace of Q(i)^(n^4).
std::vector<Vec<Scalar>> separating_basis(const SeparatingSet& R);
std::vector<Scalar> random_point(const SeparatingSet& R, const std::vector<Vec<Scalar>>& basis, Rng& rng);

enum class StabilityMode { Randomized, Symbolic };

struct StabilityReport {
  bool pass = true;
  StabilityMode mode = StabilityMode::Randomized;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<ScalarMatrix> counterexample;  // failing lower-triangular g
  std::string to_string() const;
};

// Checks g*mu stays in R for lower-triangular invertible g and mu in R.
// Randomized mode samples `trials` pairs; symbolic mode treats g and mu as
// generic and checks every relation as a polynomial identity.
StabilityReport borel_stability(const SeparatingSet& R, StabilityMode mode, std::size_t trials, std::uint64_t seed);
StabilityReport borel_stability_serial(const SeparatingSet& R, std::size_t trials, std::uint64_t seed);

struct EscapeReport {
  bool found = false;  // some g*target landed in R
  std::size_t trials = 0;
  std::optional<ScalarMatrix> witness;
};

// Random search for g with g*target in R.
EscapeReport orbit_escape_search(const SeparatingSet& R, const Lts& target, std::size_t trials, std::uint64_t seed);
EscapeReport orbit_escape_search_serial(const SeparatingSet& R, const Lts& target, std::size_t trials,
                                        std::uint64_t seed);

SeparatingSet separating_r1();
SeparatingSet separating_r2(const Scalar& lambda);
SeparatingSet separating_r3();
// The family set with c(1,3,2;4) = -c(3,1,2;4).
SeparatingSet separating_r5();
// The family set exactly as tabulated, with c(1,3,2;4) = -c(1,3,2;4).
SeparatingSet separating_r5_as_printed();

// A -/-> B for each target. With a set: source in R, R Borel-stable and no
// target orbit point found in R. Without: some invariant inequality fails.
struct NonDegenerationClaim {
  std::string label;
  SystemRef source;  // name without lambda or index function means the whole family
  std::vector<SystemRef> targets;
  std::optional<SeparatingSet> set;
};

std::vector<NonDegenerationClaim> nondegeneration_claims();

struct ClaimCheck {
  bool pass = true;
  std::vector<std::string> lines;
};
ClaimCheck check_claim(const NonDegenerationClaim& claim, std::size_t borelTrials, std::size_t escapeTrials,
                       std::uint64_t seed);

}  // namespace lts
