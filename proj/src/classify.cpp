#include "lts/catalog.hpp"
#include "lts/roots.hpp"

namespace lts {
namespace {

// Solutions of xi(lambda) = x0 in Q(i). With s = lambda^2 + lambda the
// equation reads (s+1)^3 = x0 s^2, a cubic whose coefficients depend only on
// the invariant; lambda then solves lambda^2 + lambda - s = 0.
std::optional<Scalar> lambda_from_xi(const Scalar& x0) {
  Polynomial s = Polynomial::t();
  Polynomial u = s + Polynomial(1);
  Polynomial cubic = u * u * u - Polynomial(x0) * s * s;
  auto roots = roots_in_field(cubic);
  if (!roots) return std::nullopt;
  for (const auto& r : *roots) {
    if (r.is_zero()) continue;
    auto d = sqrt_exact(Scalar(1) + Scalar(4) * r);
    if (!d) continue;
    Scalar l = (Scalar(-1) + *d) / Scalar(2);
    if ((l * l + l).is_zero() || xi(l) != x0) continue;
    return canonical_lambda(l);
  }
  return std::nullopt;
}

// Basis change sending T onto instantiate("T4,6", lambda), built from the
// eigenvectors of A_theta on T/[T,T,T]. Returns nullopt if the construction
// does not apply.
std::optional<ScalarMatrix> family_witness(const Lts& T, const Scalar& lambda) {
  auto q = quotient_cocycle(T);
  if (!q) return std::nullopt;
  const ScalarMatrix& A = q->a;
  Scalar e2 = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0) + A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0) +
              A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1);
  Scalar e3 = A.determinant();
  // A is similar to c * diag(lambda, 1, -(lambda+1)):
  // e2 = -c^2 (lambda^2+lambda+1), e3 = -c^3 lambda (lambda+1).
  Scalar s = lambda * lambda + lambda;
  Scalar c;
  if (e2.is_zero()) return std::nullopt;
  if (s.is_zero()) {
    auto r = sqrt_exact(-e2);
    if (!r) return std::nullopt;
    c = *r;
  } else {
    c = e3 * (s + Scalar(1)) / (e2 * s);
  }
  if (c.is_zero()) return std::nullopt;
  std::vector<Scalar> eig = {c * lambda, c, -c * (lambda + Scalar(1))};
  ScalarMatrix P(3, 3);
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t used = 0;
    for (std::size_t prev = 0; prev < col; ++prev)
      if (eig[prev] == eig[col]) ++used;
    ScalarMatrix shifted = A - eig[col] * ScalarMatrix::identity(3);
    auto ns = shifted.nullspace();
    if (used >= ns.size()) return std::nullopt;
    for (std::size_t r = 0; r < 3; ++r) P(r, col) = ns[used][r];
  }
  Scalar detP = P.determinant();
  if (detP.is_zero()) return std::nullopt;
  ScalarMatrix blocks(4, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 3; ++k) blocks(r, k) = P(r, k);
  blocks(3, 3) = c * detP;
  ScalarMatrix M = q->basis * blocks;  // columns: new basis vectors
  ScalarMatrix g = M.inverse();
  if (change_basis(T, g) != instantiate("T4,6", lambda)) return std::nullopt;
  return g;
}

}  // namespace

Classification classify(const Lts& T) {
  if (T.dim() == 0 || T.dim() > 4)
    throw Error(Errc::DimensionUnsupported, "classification covers dimensions 1..4, got " + std::to_string(T.dim()));
  Fingerprint fp = fingerprint(T);
  if (fp.nilpotencyIndex < 0) throw Error(Errc::NotNilpotent, "system is not nilpotent");

  for (const auto& e : catalog()) {
    if (e.dim != T.dim() || e.family) continue;
    if (catalog_fingerprint(e.name) != fp) continue;
    Classification c{e.name, std::nullopt, Confidence::FingerprintOnly, std::nullopt, fp};
    if (T == instantiate(e.name)) {
      c.confidence = Confidence::Certified;
      c.witness = ScalarMatrix::identity(T.dim());
    }
    return c;
  }

  if (T.dim() == 4 && fp.dimDerived == 1) {
    std::optional<Scalar> lambda;
    if (fp.familyXi) {
      lambda = lambda_from_xi(*fp.familyXi);
    } else if (fp == catalog_fingerprint("T4,6", Scalar(0))) {
      lambda = Scalar(0);
    }
    if (lambda) {
      if (catalog_fingerprint("T4,6", lambda) != fp)
        throw Error(Errc::NoMatch, "recovered lambda = " + lambda->to_string() + " but fingerprints differ");
      Classification c{"T4,6", lambda, Confidence::FingerprintOnly, std::nullopt, fp};
      if (auto w = family_witness(T, *lambda)) {
        c.confidence = Confidence::Certified;
        c.witness = std::move(w);
      }
      return c;
    }
    if (fp.familyXi && fp.dimAnn == 1 && fp.dimDer == 6)
      // Member of the family whose parameter lies outside Q(i).
      return Classification{"T4,6", std::nullopt, Confidence::FingerprintOnly, std::nullopt, fp};
  }
  throw Error(Errc::NoMatch, "fingerprint matches no catalog entry: " + fp.to_string());
}

}  // namespace lts
