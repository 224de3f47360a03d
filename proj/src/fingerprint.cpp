#include "lts/fingerprint.hpp"

#include "lts/cohomology.hpp"

namespace lts {

std::string Fingerprint::to_string() const {
  std::string s = "dim=" + std::to_string(dim) + " dimAnn=" + std::to_string(dimAnn) +
                  " dimDerived=" + std::to_string(dimDerived) + " dimDer=" + std::to_string(dimDer) +
                  " nilpotencyIndex=" + std::to_string(nilpotencyIndex) + " dimZ3=" + std::to_string(dimZ3) +
                  " dimH3=" + std::to_string(dimH3);
  if (familyXi) s += " xi=" + familyXi->to_string();
  return s;
}

std::optional<QuotientCocycle> quotient_cocycle(const Lts& T) {
  if (T.dim() != 4) return std::nullopt;
  Subspace L = derived(T);
  if (L.dim() != 1) return std::nullopt;
  Vec<Scalar> w = L.basis()[0];
  if (!annihilator(T).contains(w)) return std::nullopt;
  std::size_t piv = 0;
  while (w[piv].is_zero()) ++piv;
  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < 4; ++j)
    if (j != piv) comp.push_back(j);
  Cocycle theta(3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) theta.set(a, b, c, T.c(comp[a], comp[b], comp[c], piv) / w[piv]);
  QuotientCocycle q{ScalarMatrix(4, 4), a_theta(Lts::zero(3), theta)};
  for (std::size_t a = 0; a < 3; ++a) q.basis(comp[a], a) = 1;
  for (std::size_t p = 0; p < 4; ++p) q.basis(p, 3) = w[p];
  return q;
}

std::optional<Scalar> family_xi(const Lts& T) {
  auto q = quotient_cocycle(T);
  if (!q) return std::nullopt;
  const ScalarMatrix& A = q->a;
  Scalar e2 = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0) + A(0, 0) * A(2, 2) - A(0, 2) * A(2, 0) +
              A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1);
  Scalar e3 = A.determinant();
  if (e3.is_zero()) return std::nullopt;
  return -(e2 * e2 * e2) / (e3 * e3);
}

Fingerprint fingerprint(const Lts& T) {
  Fingerprint f;
  f.dim = T.dim();
  f.dimAnn = annihilator(T).dim();
  f.dimDerived = derived(T).dim();
  f.dimDer = derivations(T).dimension;
  auto nil = nilpotency(T);
  f.nilpotencyIndex = nil.nilpotent ? nil.index : -1;
  auto h = cohomology(T);
  f.dimZ3 = h.dimZ3;
  f.dimH3 = h.dimH3;
  f.familyXi = family_xi(T);
  return f;
}

}  // namespace lts
