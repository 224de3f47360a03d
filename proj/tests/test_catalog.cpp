#include <gtest/gtest.h>

#include <algorithm>

#include "lts/catalog.hpp"
#include "lts/error.hpp"
#include "lts/random.hpp"
#include "oracles.hpp"

using namespace lts;

namespace {

Errc kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return Errc::NoMatch;  // never expected in these tests
}

bool in_orbit(const Scalar& x, const Scalar& lambda) {
  auto orbit = xi_orbit(lambda);
  return std::find(orbit.begin(), orbit.end(), x) != orbit.end();
}

}  // namespace

TEST(Catalog, InstancesAreVerifiedNilpotentSystems) {
  for (const auto& e : catalog()) {
    if (e.family) {
      for (const auto& l : family_lambda_samples()) {
        Lts T = instantiate(e.name, l);
        EXPECT_TRUE(oracle::axioms_hold(T));
        EXPECT_TRUE(nilpotency(T).nilpotent);
      }
      continue;
    }
    Lts T = instantiate(e.name);
    EXPECT_EQ(T.dim(), e.dim);
    EXPECT_TRUE(T.verified());
    EXPECT_TRUE(oracle::axioms_hold(T));
    EXPECT_TRUE(nilpotency(T).nilpotent);
  }
}

TEST(Catalog, PrintedProducts) {
  Lts t45 = instantiate("T4,5");
  EXPECT_EQ(t45.c(1, 0, 2, 3), Scalar(2));
  Lts f = instantiate("T4,6", Scalar(1));
  EXPECT_EQ(f.c(0, 1, 2, 3), Scalar(-2));
  EXPECT_EQ(f.c(1, 2, 0, 3), Scalar(1));
  EXPECT_EQ(f.c(2, 0, 1, 3), Scalar(1));
  EXPECT_EQ(instantiate("T1,1"), Lts::zero(1));
  EXPECT_EQ(direct_sum(instantiate("T3,2"), instantiate("T1,1")), instantiate("T4,2"));
  EXPECT_EQ(direct_sum(instantiate("T2,1"), instantiate("T1,1")), instantiate("T3,1"));
  EXPECT_EQ(table_text(catalog_entry("T4,6")), "[e1,e2,e3]=-(lambda+1)e4, [e2,e3,e1]=lambda e4, [e3,e1,e2]=e4");
}

TEST(Catalog, InstantiateErrors) {
  EXPECT_EQ(kind_of([] { instantiate("T5,1"); }), Errc::UnknownName);
  EXPECT_EQ(kind_of([] { instantiate("T4,6"); }), Errc::MissingParameter);
  EXPECT_EQ(kind_of([] { instantiate("T4,7", Scalar(2)); }), Errc::PreconditionViolated);
}

TEST(Catalog, DerivationDimensionsMatchOracleAndPrintedValues) {
  for (const auto& row : table1_report()) {
    Lts T = instantiate(row.name, row.lambda);
    EXPECT_EQ(row.computed, oracle::derivation_dim(T)) << row.name;
    EXPECT_TRUE(row.match()) << row.name;
  }
  EXPECT_EQ(table_der("T4,6", Scalar::i()), 6u);
  EXPECT_EQ(derivations(instantiate("T4,6", Scalar::i())).dimension, 6u);
  EXPECT_EQ(derivations(instantiate("T4,6", Scalar(5))).dimension, 6u);
}

TEST(Xi, ValuesAndOrbit) {
  EXPECT_EQ(xi(Scalar(1)), Scalar(Rational(27, 4)));
  EXPECT_EQ(xi(Scalar(2)), Scalar(Rational(343, 36)));
  EXPECT_EQ(xi(Scalar(Rational(1, 2))), Scalar(Rational(343, 36)));
  EXPECT_EQ(kind_of([] { xi(Scalar(0)); }), Errc::SingularParameter);
  EXPECT_EQ(kind_of([] { xi(Scalar(-1)); }), Errc::SingularParameter);
  Rng rng(21);
  for (int r = 0; r < 30; ++r) {
    Scalar l = rng.small_scalar();
    if ((l * l + l).is_zero()) continue;
    EXPECT_EQ(xi(l), oracle::xi(l));
    for (const auto& m : xi_orbit(l)) EXPECT_EQ(xi(m), xi(l));
    EXPECT_TRUE(in_orbit(canonical_lambda(l), l));
  }
  EXPECT_EQ(canonical_lambda(Scalar(Rational(1, 2))), canonical_lambda(Scalar(2)));
}

TEST(FamilyIsomorphism, SigmaMapsAreExactWitnesses) {
  for (const auto& l : family_lambda_samples()) {
    if ((l * l + l).is_zero()) continue;
    for (int k = 1; k <= 6; ++k) {
      FamilyIsomorphism f = family_isomorphism(k, l);
      EXPECT_EQ(change_basis(instantiate("T4,6", l), f.sigma), instantiate("T4,6", f.target)) << k;
      EXPECT_TRUE(in_orbit(f.target, l));
    }
  }
  FamilyIsomorphism s2 = family_isomorphism(2, Scalar(3));
  EXPECT_EQ(s2.target, Scalar(-4));
  EXPECT_EQ(s2.sigma(2, 0), Scalar(1));
  EXPECT_EQ(s2.sigma(3, 3), Scalar(-1));
  EXPECT_EQ(family_isomorphism(3, Scalar(2)).target, Scalar(Rational(1, 2)));
  EXPECT_EQ(family_isomorphism(1, Scalar(7)).sigma, ScalarMatrix::identity(4));
  EXPECT_EQ(kind_of([] { family_isomorphism(3, Scalar(0)); }), Errc::SingularParameter);
  EXPECT_EQ(kind_of([] { family_isomorphism(6, Scalar(-1)); }), Errc::SingularParameter);
  EXPECT_EQ(kind_of([] { family_isomorphism(7, Scalar(2)); }), Errc::PreconditionViolated);
}

TEST(Classify, RecoversEveryCatalogName) {
  for (const auto& e : catalog()) {
    if (e.family) continue;
    Classification c = classify(instantiate(e.name));
    EXPECT_EQ(c.name, e.name);
    EXPECT_EQ(c.confidence, Confidence::Certified);
  }
  for (const auto& l : family_lambda_samples()) {
    Classification c = classify(instantiate("T4,6", l));
    EXPECT_EQ(c.name, "T4,6");
    ASSERT_TRUE(c.lambda);
    EXPECT_TRUE(in_orbit(*c.lambda, l));
  }
}

TEST(Classify, FamilyUnderRandomBasisChange) {
  Rng rng(77);
  for (int r = 0; r < 10; ++r) {
    Scalar l = r % 2 ? Scalar(2) : Scalar::i();
    ScalarMatrix g = rng.invertible(4);
    Lts T = change_basis(instantiate("T4,6", l), g);
    Classification c = classify(T);
    EXPECT_EQ(c.name, "T4,6");
    ASSERT_TRUE(c.lambda);
    EXPECT_TRUE(in_orbit(*c.lambda, l));
    if (c.confidence == Confidence::Certified) {
      ASSERT_TRUE(c.witness);
      EXPECT_EQ(change_basis(T, *c.witness), instantiate("T4,6", c.lambda));
    }
  }
}

TEST(Classify, SingularMembersShareABucket) {
  Classification a = classify(instantiate("T4,6", Scalar(0)));
  Classification b = classify(instantiate("T4,6", Scalar(-1)));
  EXPECT_EQ(a.name, b.name);
  EXPECT_EQ(a.lambda, b.lambda);
}

TEST(Classify, LowDimensionsAreAbelianAndErrors) {
  for (std::size_t n = 1; n <= 2; ++n) {
    Rng rng(n);
    Classification c = classify(change_basis(Lts::zero(n), rng.invertible(n)));
    EXPECT_TRUE(instantiate(c.name).is_abelian());
  }
  EXPECT_EQ(classify(change_basis(instantiate("T3,2"), Rng(4).invertible(3))).name, "T3,2");
  EXPECT_EQ(kind_of([] { classify(Lts::zero(5)); }), Errc::DimensionUnsupported);
  std::vector<Scalar> b(27);
  auto set = [&](int i, int j, int k, int c) {
    b[std::size_t((i * 3 + j) * 3 + k)] = Scalar(c);
    b[std::size_t((j * 3 + i) * 3 + k)] = Scalar(-c);
  };
  set(0, 1, 1, 2);
  set(0, 2, 2, -2);
  set(1, 2, 0, 1);
  Lts sl2 = lts_from_lie(3, b);
  EXPECT_EQ(kind_of([&] { classify(sl2); }), Errc::NotNilpotent);
}

TEST(LieConstruction, Examples) {
  std::vector<Scalar> heis(27);
  heis[(0 * 3 + 1) * 3 + 2] = 1;
  heis[(1 * 3 + 0) * 3 + 2] = -1;
  EXPECT_TRUE(lts_from_lie(3, heis).is_abelian());
  EXPECT_TRUE(lts_from_lie(2, std::vector<Scalar>(8)).is_abelian());
  // sl2 with e1 = e, e2 = f, e3 = h: [[e,f],e] = [h,e] = 2e.
  std::vector<Scalar> b(27);
  auto set = [&](int i, int j, int k, int c) {
    b[std::size_t((i * 3 + j) * 3 + k)] = Scalar(c);
    b[std::size_t((j * 3 + i) * 3 + k)] = Scalar(-c);
  };
  set(0, 1, 2, 1);
  set(2, 0, 0, 2);
  set(2, 1, 1, -2);
  EXPECT_EQ(lts_from_lie(3, b).product(0, 1, 0), (Vec<Scalar>{2, 0, 0}));
}
