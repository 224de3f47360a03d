#include <gtest/gtest.h>

#include <chrono>

#include "lts/catalog.hpp"
#include "lts/degeneration.hpp"
#include "lts/error.hpp"
#include "lts/random.hpp"
#include "oracles.hpp"

using namespace lts;

namespace {

using RF = RationalFunction;

RF rf(const char* s) { return RF::parse(s); }

RfMatrix lift(const ScalarMatrix& m) {
  RfMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RF(m(i, j));
  return out;
}

RfMatrix scaled_identity(std::size_t n, const RF& f) {
  RfMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f;
  return m;
}

Errc kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return Errc::NoMatch;
}

std::vector<Scalar> evaluate(const std::vector<RF>& c, const Scalar& t0) {
  std::vector<Scalar> out;
  out.reserve(c.size());
  for (const auto& f : c) out.push_back(evaluate_at(f, t0));
  return out;
}

}  // namespace

TEST(Transport, IdentityBasisKeepsConstants) {
  for (const char* name : {"T4,5", "T4,7", "T4,8"}) {
    Lts T = instantiate(name);
    auto c = lift_constants(T);
    EXPECT_EQ(transport_constants(4, c, scaled_identity(4, RF(1))), c);
  }
}

TEST(Transport, PrintedExamples) {
  Lts t42 = instantiate("T4,2");
  auto w = transport_constants(4, lift_constants(t42), scaled_identity(4, RF::t()));
  EXPECT_EQ(w[t42.index(0, 1, 0, 2)], rf("t^2"));

  Lts t43 = instantiate("T4,3");
  RfMatrix b = scaled_identity(4, RF(1));
  b(1, 1) = RF::t();
  b(2, 2) = RF::t();
  auto v = transport_constants(4, lift_constants(t43), b);
  EXPECT_EQ(v[t43.index(0, 1, 0, 2)], RF(1));
  EXPECT_EQ(v[t43.index(0, 1, 1, 3)], rf("t^2"));
}

TEST(Transport, SingularBasisAndWrongShape) {
  Lts T = instantiate("T4,2");
  RfMatrix b = scaled_identity(4, RF::t());
  b(3, 3) = RF(0);
  EXPECT_EQ(kind_of([&] { transport_constants(4, lift_constants(T), b); }), Errc::SingularBasis);
  EXPECT_EQ(kind_of([&] { transport_constants(4, lift_constants(T), scaled_identity(3, RF(1))); }),
            Errc::DimensionMismatch);
}

TEST(Transport, ComposesOverProductBases) {
  Rng rng(14);
  for (int r = 0; r < 6; ++r) {
    Lts T = instantiate(r % 2 ? "T4,7" : "T4,5");
    RfMatrix A = lift(rng.invertible(4)) + scaled_identity(4, RF::t());
    RfMatrix B = lift(rng.invertible(4));
    B(0, 0) = B(0, 0) + RF::t();
    auto c = lift_constants(T);
    auto twice = transport_constants(4, transport_constants(4, c, A), B);
    auto once = transport_constants(4, c, B * A);
    EXPECT_EQ(twice, once);
    for (int k = 0; k < 2; ++k) {
      Scalar t0 = rng.small_nonzero_scalar();
      try {
        EXPECT_EQ(evaluate(twice, t0), evaluate(once, t0));
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), Errc::PoleAtPoint);
      }
    }
  }
}

TEST(Witness, TabulatedRowsVerify) {
  auto rows = known_degenerations();
  ASSERT_EQ(rows.size(), 13u);
  for (const auto& w : rows) {
    auto start = std::chrono::steady_clock::now();
    DegenerationCheck c = verify_degeneration(w);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_TRUE(c.pass) << w.label() << "\n" << c.to_string();
    EXPECT_TRUE(c.poles.empty());
    EXPECT_LT(secs, 1.0) << w.label();
    EXPECT_EQ(c.limit, instantiate(w.target.name, w.target.lambda).constants());
  }
  EXPECT_TRUE(verify_degeneration(family_to_t45()).pass);
  EXPECT_TRUE(verify_degeneration(t32_to_t31()).pass);
}

TEST(Witness, FamilyRowAtOtherParameters) {
  for (const auto& l : {Scalar(0), Scalar(3), Scalar(5), Scalar::i()})
    EXPECT_TRUE(verify_degeneration(family_to_t44(l)).pass) << l;
  for (const auto& l : {Scalar(1), Scalar(-2), Scalar(Rational(-1, 2))})
    EXPECT_EQ(kind_of([&] { family_to_t44(l); }), Errc::SingularParameter);
}

TEST(Witness, SpecializationAtSamplePointsIsABasisChange) {
  std::size_t checked = 0;
  for (const auto& w : known_degenerations()) {
    Lts src = instantiate(w.source.name, w.source.lambda);
    auto transported = transport_constants(4, lift_constants(src), w.basis);
    for (const Scalar& t0 : {Scalar(1), Scalar(Rational(1, 2))}) {
      ScalarMatrix a(4, 4);
      bool ok = true;
      try {
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j) a(i, j) = evaluate_at(w.basis(i, j), t0);
      } catch (const Error&) {
        ok = false;
      }
      if (!ok || a.determinant().is_zero()) continue;
      EXPECT_EQ(evaluate(transported, t0), oracle::transport_at(src, w.basis, t0)) << w.label();
      ++checked;
    }
  }
  EXPECT_GE(checked, 20u);
}

TEST(Witness, LimitsAgreeWithValueAtZero) {
  for (const auto& w : known_degenerations()) {
    Lts src = instantiate(w.source.name, w.source.lambda);
    for (const auto& f : transport_constants(4, lift_constants(src), w.basis)) {
      EXPECT_EQ(limit_at_zero(f), evaluate_at(f, Scalar(0)));
    }
  }
}

TEST(Witness, FailuresAreReported) {
  DegenerationWitness id{{"T4,2"}, {"T4,3"}, scaled_identity(4, RF(1))};
  DegenerationCheck c = verify_degeneration(id);
  EXPECT_FALSE(c.pass);
  EXPECT_FALSE(c.mismatches.empty());
  EXPECT_TRUE(c.poles.empty());

  DegenerationWitness pole{{"T4,2"}, {"T4,1"}, scaled_identity(4, rf("1/t"))};
  DegenerationCheck p = verify_degeneration(pole);
  EXPECT_FALSE(p.pass);
  EXPECT_EQ(p.poles.front(), "c(1,2,1;3)");
  EXPECT_TRUE(p.limit.empty());

  DegenerationWitness bad_target{{"T4,6", std::nullopt, rf("t")}, {"T4,6", std::nullopt, rf("t")},
                                 scaled_identity(4, RF(1))};
  EXPECT_EQ(kind_of([&] { verify_degeneration(bad_target); }), Errc::PreconditionViolated);
  EXPECT_EQ(kind_of([] { source_constants({"T4,7", std::nullopt, rf("t")}); }), Errc::PreconditionViolated);
}

TEST(Witness, RetargetAlongFamilyIsomorphism) {
  DegenerationWitness w = known_degenerations().front();
  ASSERT_EQ(w.target.label(), "T4,6^0");
  FamilyIsomorphism s = family_isomorphism(2, Scalar(0));
  DegenerationWitness moved = retarget(w, s.sigma, {"T4,6", s.target});
  EXPECT_EQ(moved.target.label(), "T4,6^-1");
  EXPECT_TRUE(verify_degeneration(moved).pass);
}

TEST(Witness, BasisStringsRoundTrip) {
  for (const auto& w : known_degenerations()) EXPECT_EQ(parse_basis(basis_strings(w.basis)), w.basis);
  EXPECT_EQ(kind_of([] { parse_basis({{"1", "0"}, {"0"}}); }), Errc::DimensionMismatch);
}

TEST(Necessary, Examples) {
  NecessaryReport a = necessary_conditions(instantiate("T4,5"), instantiate("T4,9"));
  EXPECT_FALSE(a.consistent);
  EXPECT_EQ(a.conditions[2].invariant, "dim T^(1)");
  EXPECT_FALSE(a.conditions[2].holds);
  EXPECT_FALSE(necessary_conditions(instantiate("T4,6", Scalar(2)), instantiate("T4,3")).consistent);
  NecessaryReport same = necessary_conditions(instantiate("T4,8"), instantiate("T4,8"));
  EXPECT_TRUE(same.consistent);
  EXPECT_TRUE(same.sameFingerprint);
  // A family member with the same Der dimension only passes as the family.
  Lts generic = instantiate("T4,6", Scalar(2)), t45 = instantiate("T4,5");
  EXPECT_FALSE(necessary_conditions(generic, t45).consistent);
  EXPECT_TRUE(necessary_conditions(generic, t45, true).consistent);
}

TEST(Necessary, HoldForEveryWitness) {
  for (const auto& w : known_degenerations()) {
    Lts a = instantiate(w.source.name, w.source.lambda), b = instantiate(w.target.name, w.target.lambda);
    NecessaryReport r = necessary_conditions(a, b);
    EXPECT_TRUE(r.consistent) << w.label() << ": " << r.to_string();
    EXPECT_LT(derivations(a).dimension, derivations(b).dimension) << w.label();
  }
}
