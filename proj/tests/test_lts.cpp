#include <gtest/gtest.h>

#include "lts/catalog.hpp"
#include "lts/error.hpp"
#include "lts/random.hpp"
#include "oracles.hpp"

using namespace lts;

namespace {

Vec<Scalar> e(std::size_t n, int i, Scalar c = 1) {
  Vec<Scalar> v(n);
  v[std::size_t(i - 1)] = c;
  return v;
}

std::vector<Lts> nonfamily_systems() {
  std::vector<Lts> out;
  for (const auto& entry : catalog())
    if (!entry.family) out.push_back(instantiate(entry.name));
  for (const auto& l : family_lambda_samples()) out.push_back(instantiate("T4,6", l));
  return out;
}

Vec<Scalar> random_vec(Rng& rng, std::size_t n) {
  Vec<Scalar> v(n);
  for (auto& x : v) x = rng.small_scalar();
  return v;
}

}  // namespace

TEST(CompleteTable, CyclicIdentityForcesMissingProduct) {
  // Generators of T4,5 leave [e1,e2,e3] open; search every small vector for
  // values compatible with the cyclic identity.
  std::vector<Vec<Scalar>> solutions;
  Lts T = complete_table(4, {{{2, 3, 1}, e(4, 4)}, {{3, 1, 2}, e(4, 4)}, {{2, 1, 3}, e(4, 4, 2)}, {{2, 3, 2}, e(4, 4)}});
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int d = -3; d <= 3; ++d) {
          Vec<Scalar> x{a, b, c, d};
          bool ok = true;
          for (std::size_t p = 0; p < 4; ++p) ok = ok && (x[p] + T.c(1, 2, 0, p) + T.c(2, 0, 1, p)).is_zero();
          if (ok) solutions.push_back(x);
        }
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(solutions[0], e(4, 4, -2));
  EXPECT_EQ(T.product(0, 1, 2), e(4, 4, -2));
}

TEST(CompleteTable, ReportsCyclicViolation) {
  Lts T = complete_table_unchecked(4, {{{1, 2, 3}, e(4, 4)}});
  AxiomReport r = check_axioms(T);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.identity, "A2");
  EXPECT_EQ(r.tuple, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(r.residual, e(4, 4));
  EXPECT_THROW(complete_table(4, {{{1, 2, 3}, e(4, 4)}}), Error);
}

TEST(CompleteTable, Errors) {
  try {
    complete_table(4, {{{1, 2, 3}, e(4, 4)}, {{2, 1, 3}, e(4, 4)}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), Errc::InconsistentTable);
  }
  try {
    complete_table(3, {{{1, 2, 4}, e(3, 1)}});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), Errc::DimensionMismatch);
  }
  EXPECT_THROW(Lts(2, std::vector<Scalar>(5)), Error);
}

TEST(Axioms, CatalogAgreesWithDirectEvaluation) {
  for (const Lts& T : nonfamily_systems()) {
    EXPECT_TRUE(check_axioms(T).pass);
    EXPECT_TRUE(oracle::axioms_hold(T));
  }
}

TEST(Axioms, ParallelSweepMatchesSerial) {
  Rng rng(31);
  for (int r = 0; r < 60; ++r) {
    Lts T = instantiate(r % 2 ? "T4,7" : "T4,8");
    std::vector<Scalar> c = T.constants();
    c[rng.index(c.size())] += rng.small_nonzero_scalar();
    Lts bad(4, c);
    AxiomReport p = check_axioms(bad), s = check_axioms_serial(bad);
    EXPECT_EQ(p.pass, s.pass);
    EXPECT_EQ(p.identity, s.identity);
    EXPECT_EQ(p.tuple, s.tuple);
    EXPECT_EQ(p.residual, s.residual);
    EXPECT_EQ(p.pass, oracle::axioms_hold(bad));
  }
}

TEST(Axioms, HoldOnRandomVectors) {
  Rng rng(41);
  for (const Lts& T : nonfamily_systems()) {
    const std::size_t n = T.dim();
    for (int r = 0; r < 5; ++r) {
      auto x = random_vec(rng, n), y = random_vec(rng, n), z = random_vec(rng, n);
      auto u = random_vec(rng, n), v = random_vec(rng, n);
      auto s1 = eval(T, x, y, z), s2 = eval(T, y, x, z);
      auto c1 = eval(T, y, z, x), c2 = eval(T, z, x, y);
      auto lhs = eval(T, u, v, eval(T, x, y, z));
      auto r1 = eval(T, eval(T, u, v, x), y, z), r2 = eval(T, x, eval(T, u, v, y), z),
           r3 = eval(T, x, y, eval(T, u, v, z));
      for (std::size_t p = 0; p < n; ++p) {
        EXPECT_TRUE((s1[p] + s2[p]).is_zero());
        EXPECT_TRUE((s1[p] + c1[p] + c2[p]).is_zero());
        EXPECT_EQ(lhs[p], r1[p] + r2[p] + r3[p]);
      }
    }
  }
}

TEST(Invariants, DerivationsMatchOrbitTangent) {
  for (const Lts& T : nonfamily_systems()) EXPECT_EQ(derivations(T).dimension, oracle::derivation_dim(T));
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(derivations(Lts::zero(n)).dimension, n * n);
}

TEST(Invariants, DerivationBasisSatisfiesLeibniz) {
  Lts T = instantiate("T4,8");
  for (const auto& D : derivations(T).basis)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
          Vec<Scalar> ei = e(4, int(i) + 1), ej = e(4, int(j) + 1), ek = e(4, int(k) + 1);
          Vec<Scalar> lhs = D * T.product(i, j, k);
          Vec<Scalar> a = eval(T, D * ei, ej, ek), b = eval(T, ei, D * ej, ek), c = eval(T, ei, ej, D * ek);
          for (std::size_t p = 0; p < 4; ++p) EXPECT_EQ(lhs[p], a[p] + b[p] + c[p]);
        }
}

TEST(Invariants, AnnihilatorDerivedNilpotency) {
  Lts T = instantiate("T4,7");
  EXPECT_EQ(annihilator(T), Subspace::span(4, {e(4, 4)}));
  EXPECT_EQ(derived(T), Subspace::span(4, {e(4, 3), e(4, 4)}));
  NilpotencyReport r = nilpotency(T);
  EXPECT_TRUE(r.nilpotent);
  EXPECT_EQ(r.index, 3);
  ASSERT_EQ(r.series.size(), 4u);
  EXPECT_EQ(r.series[1].dim(), 2u);
  EXPECT_EQ(r.series[2].dim(), 1u);
  EXPECT_TRUE(r.series[3].is_zero());
}

TEST(Invariants, NilpotentSystemsHaveNonzeroAnnihilator) {
  for (const Lts& T : nonfamily_systems()) {
    if (T.is_abelian() && T.dim() > 0) continue;
    EXPECT_TRUE(nilpotency(T).nilpotent);
    EXPECT_FALSE(annihilator(T).is_zero());
  }
}

TEST(Invariants, SemisimpleSystemIsNotNilpotent) {
  // sl2 with [h,e]=2e, [h,f]=-2f, [e,f]=h and the triple product [[x,y],z].
  std::vector<Scalar> b(27);
  auto set = [&](int i, int j, int k, int c) {
    b[std::size_t((i * 3 + j) * 3 + k)] = Scalar(c);
    b[std::size_t((j * 3 + i) * 3 + k)] = Scalar(-c);
  };
  set(0, 1, 1, 2);
  set(0, 2, 2, -2);
  set(1, 2, 0, 1);
  Lts T = lts_from_lie(3, b);
  EXPECT_TRUE(check_axioms(T).pass);
  EXPECT_FALSE(nilpotency(T).nilpotent);
  EXPECT_EQ(nilpotency(T).index, -1);
  EXPECT_TRUE(annihilator(T).is_zero());
  std::vector<Scalar> bad(27);
  bad[(0 * 3 + 1) * 3 + 1] = 1;  // skew part missing
  EXPECT_THROW(lts_from_lie(3, bad), Error);
}

TEST(Invariants, OrbitDimension) {
  EXPECT_EQ(orbit_dimension(instantiate("T4,7")), 11u);
  EXPECT_EQ(orbit_dimension(instantiate("T4,1")), 0u);
  // n^2 - dim Der for T4,2 is 7; the printed stratum is 5 and stays data only.
  EXPECT_EQ(orbit_dimension(instantiate("T4,2")), 7u);
  EXPECT_EQ(catalog_entry("T4,2").diagramOrbit, 5u);
}

TEST(ChangeBasis, AgreesWithDirectSumAndComposes) {
  Rng rng(9);
  for (int r = 0; r < 40; ++r) {
    Lts T = instantiate(r % 2 ? "T4,8" : "T4,5");
    ScalarMatrix a = rng.invertible(4), b = rng.invertible(4);
    Lts A = change_basis(T, a);
    EXPECT_EQ(A.constants(), oracle::change_basis_direct(T, a));
    EXPECT_EQ(change_basis(A, b), change_basis(T, b * a));
    EXPECT_TRUE(check_axioms(A).pass);
  }
  EXPECT_THROW(change_basis(instantiate("T4,2"), ScalarMatrix(4, 4)), Error);
}

TEST(DirectSum, DimensionsAdd) {
  Lts a = instantiate("T3,2"), b = instantiate("T2,1");
  Lts s = direct_sum(a, b);
  EXPECT_EQ(s.dim(), 5u);
  EXPECT_TRUE(check_axioms(s).pass);
  EXPECT_EQ(derived(s).dim(), derived(a).dim() + derived(b).dim());
  EXPECT_EQ(annihilator(s).dim(), annihilator(a).dim() + annihilator(b).dim());
  EXPECT_EQ(direct_sum(a, Lts::zero(0)), a);
}
