#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lts/fingerprint.hpp"
#include "lts/rational_function.hpp"

namespace lts {

// A generating product [e_a,e_b,e_c] = (c0 + c1*lambda) e_target, 1-based.
struct CatalogTerm {
  std::array<int, 3> args;
  int target;
  Rational c0;
  Rational c1;
};

struct CatalogEntry {
  std::string name;  // "T4,6"
  std::size_t dim;
  bool family;
  std::vector<CatalogTerm> generators;
  std::optional<std::size_t> tableDer;   // printed dim Der, non-family entries
  std::optional<std::size_t> diagramOrbit;  // printed orbit stratum, non-family entries
};

const std::vector<CatalogEntry>& catalog();
// Throws UnknownName.
const CatalogEntry& catalog_entry(std::string_view name);

// Throws UnknownName, MissingParameter (family without lambda) or
// PreconditionViolated (lambda given to a fixed entry).
Lts instantiate(std::string_view name, const std::optional<Scalar>& lambda = std::nullopt);
// Family constants with lambda replaced by a rational function f(t).
std::vector<RationalFunction> instantiate_family(const RationalFunction& f);
// Multiplication table text, e.g. "[e1,e2,e3]=-(lambda+1)e4, ...".
std::string table_text(const CatalogEntry& e);

// Throws SingularParameter for lambda^2 + lambda = 0.
Scalar xi(const Scalar& lambda);
// lambda, -(lambda+1), 1/lambda, -(lambda+1)/lambda, -1/(lambda+1), -lambda/(lambda+1).
std::vector<Scalar> xi_orbit(const Scalar& lambda);
// Preferred member of the orbit: smallest height, Gaussian integers first,
// then larger real part, then larger imaginary part.
Scalar canonical_lambda(const Scalar& lambda);

struct FamilyIsomorphism {
  Scalar target;
  ScalarMatrix sigma;  // columns are the images of e1..e4
};
// Throws SingularParameter or PreconditionViolated (k outside 1..6).
FamilyIsomorphism family_isomorphism(int k, const Scalar& lambda);

// Printed dim Der for an entry (the family value depends on lambda).
std::size_t table_der(std::string_view name, const std::optional<Scalar>& lambda = std::nullopt);

const std::vector<Scalar>& family_lambda_samples();  // 1, -2, -1/2, 2, 3, 5, i
const std::vector<Scalar>& table1_lambda_samples();  // 1, -2, -1/2, 2, 3

struct Table1Row {
  std::string name;
  std::optional<Scalar> lambda;
  std::string table;
  std::size_t computed;
  std::size_t printed;
  bool match() const { return computed == printed; }
};
std::vector<Table1Row> table1_report();

enum class Confidence { Certified, FingerprintOnly };
std::string_view confidence_name(Confidence c);

struct Classification {
  std::string name;
  std::optional<Scalar> lambda;
  Confidence confidence;
  // change_basis(T, witness) equals the catalog instance when certified.
  std::optional<ScalarMatrix> witness;
  Fingerprint fingerprint;
};

// Throws NotNilpotent, DimensionUnsupported or NoMatch.
Classification classify(const Lts& T);

// Fingerprint of a catalog instance, cached.
const Fingerprint& catalog_fingerprint(std::string_view name, const std::optional<Scalar>& lambda = std::nullopt);

}  // namespace lts
