#include "lts/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace lts {

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"T1,1", 1, false, {}, std::nullopt, 0},
      {"T2,1", 2, false, {}, std::nullopt, 0},
      {"T3,1", 3, false, {}, std::nullopt, 0},
      {"T3,2", 3, false, {{{1, 2, 1}, 3, 1, 0}}, std::nullopt, 4},
      {"T4,1", 4, false, {}, 16, 0},
      {"T4,2", 4, false, {{{1, 2, 1}, 3, 1, 0}}, 9, 5},
      {"T4,3", 4, false, {{{1, 2, 1}, 3, 1, 0}, {{1, 2, 2}, 4, 1, 0}}, 8, 8},
      {"T4,4", 4, false, {{{2, 3, 2}, 4, 1, 0}, {{3, 1, 3}, 4, 1, 0}}, 7, 9},
      {"T4,5", 4, false, {{{2, 3, 1}, 4, 1, 0}, {{3, 1, 2}, 4, 1, 0}, {{2, 1, 3}, 4, 2, 0}, {{2, 3, 2}, 4, 1, 0}}, 6, 10},
      {"T4,6", 4, true, {{{1, 2, 3}, 4, -1, -1}, {{2, 3, 1}, 4, 0, 1}, {{3, 1, 2}, 4, 1, 0}}, std::nullopt, std::nullopt},
      {"T4,7", 4, false, {{{1, 2, 1}, 3, 1, 0}, {{1, 2, 3}, 4, 1, 0}, {{1, 3, 2}, 4, 1, 0}}, 5, 11},
      {"T4,8", 4, false, {{{1, 2, 1}, 3, 1, 0}, {{1, 3, 1}, 4, 1, 0}, {{1, 2, 2}, 4, 1, 0}}, 6, 10},
      {"T4,9", 4, false, {{{1, 2, 1}, 3, 1, 0}, {{1, 3, 1}, 4, 1, 0}}, 7, 9},
  };
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw Error(Errc::UnknownName, "no catalog entry named '" + std::string(name) + "'");
}

Lts instantiate(std::string_view name, const std::optional<Scalar>& lambda) {
  const CatalogEntry& e = catalog_entry(name);
  if (e.family && !lambda) throw Error(Errc::MissingParameter, e.name + " needs a value for lambda");
  if (!e.family && lambda) throw Error(Errc::PreconditionViolated, e.name + " takes no parameter");
  Scalar lam = lambda.value_or(Scalar(0));
  std::vector<Generator> gens;
  for (const auto& t : e.generators) {
    Vec<Scalar> v(e.dim);
    v[std::size_t(t.target - 1)] = Scalar(t.c0) + Scalar(t.c1) * lam;
    gens.push_back({t.args, std::move(v)});
  }
  return complete_table(e.dim, gens);
}

std::vector<RationalFunction> instantiate_family(const RationalFunction& f) {
  const std::vector<Scalar> c0 = instantiate("T4,6", Scalar(0)).constants();
  const std::vector<Scalar> c1 = instantiate("T4,6", Scalar(1)).constants();
  std::vector<RationalFunction> out(c0.size());
  for (std::size_t t = 0; t < c0.size(); ++t) {
    Scalar slope = c1[t] - c0[t];
    out[t] = RationalFunction(c0[t]);
    if (!slope.is_zero()) out[t] += RationalFunction(slope) * f;
  }
  return out;
}

std::string table_text(const CatalogEntry& e) {
  if (e.generators.empty()) return "abelian";
  std::string s;
  for (const auto& t : e.generators) {
    if (!s.empty()) s += ", ";
    s += "[e" + std::to_string(t.args[0]) + ",e" + std::to_string(t.args[1]) + ",e" + std::to_string(t.args[2]) + "]=";
    std::string coeff;
    if (t.c1.is_zero()) {
      if (t.c0 == Rational(-1)) coeff = "-";
      else if (!t.c0.is_one()) coeff = t.c0.to_string();
    } else if (t.c0.is_zero()) {
      coeff = t.c1.is_one() ? "lambda " : t.c1.to_string() + "*lambda ";
    } else if (t.c0 == t.c1) {
      coeff = (t.c0.is_one() ? "" : t.c0 == Rational(-1) ? "-" : t.c0.to_string()) + "(lambda+1)";
    } else {
      coeff = "(" + t.c1.to_string() + "*lambda+" + t.c0.to_string() + ")";
    }
    s += coeff + "e" + std::to_string(t.target);
  }
  return s;
}

Scalar xi(const Scalar& lambda) {
  Scalar s = lambda * lambda + lambda;
  if (s.is_zero()) throw Error(Errc::SingularParameter, "xi is undefined at lambda = " + lambda.to_string());
  Scalar u = s + Scalar(1);
  return u * u * u / (s * s);
}

std::vector<Scalar> xi_orbit(const Scalar& l) {
  if ((l * l + l).is_zero()) throw Error(Errc::SingularParameter, "orbit needs lambda^2 + lambda != 0");
  Scalar l1 = l + Scalar(1);
  return {l, -l1, l.inv(), -l1 / l, -l1.inv(), -l / l1};
}

namespace {

mpz_class height(const Scalar& s) {
  mpz_class h = 0;
  for (const Rational* r : {&s.re(), &s.im()}) {
    h = std::max(h, mpz_class(abs(r->numerator())));
    h = std::max(h, r->denominator());
  }
  return h;
}

bool before(const Scalar& a, const Scalar& b) {
  mpz_class ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  bool ia = a.re().is_integer() && a.im().is_integer();
  bool ib = b.re().is_integer() && b.im().is_integer();
  if (ia != ib) return ia;
  if (a.re() != b.re()) return a.re() > b.re();
  return a.im() > b.im();
}

}  // namespace

Scalar canonical_lambda(const Scalar& lambda) {
  if ((lambda * lambda + lambda).is_zero()) return Scalar(0);
  auto orbit = xi_orbit(lambda);
  return *std::min_element(orbit.begin(), orbit.end(), before);
}

FamilyIsomorphism family_isomorphism(int k, const Scalar& l) {
  if (k < 1 || k > 6) throw Error(Errc::PreconditionViolated, "sigma index must be 1..6");
  if ((k == 3 || k == 4) && l.is_zero()) throw Error(Errc::SingularParameter, "sigma needs lambda != 0");
  if ((k == 5 || k == 6) && (l + Scalar(1)).is_zero()) throw Error(Errc::SingularParameter, "sigma needs lambda != -1");
  ScalarMatrix s(4, 4);
  // s(row, col) = coefficient of e_row in sigma(e_col).
  auto map = [&s](int from, int to, const Scalar& c) { s(std::size_t(to - 1), std::size_t(from - 1)) = c; };
  const Scalar one(1), l1 = l + Scalar(1);
  Scalar target;
  switch (k) {
    case 1:
      map(1, 1, one), map(2, 2, one), map(3, 3, one), map(4, 4, one);
      target = l;
      break;
    case 2:
      map(1, 3, one), map(2, 2, one), map(3, 1, one), map(4, 4, -one);
      target = -l1;
      break;
    case 3:
      map(1, 2, one), map(2, 1, one), map(3, 3, one), map(4, 4, -l.inv());
      target = l.inv();
      break;
    case 4:
      map(1, 2, one), map(2, 3, one), map(3, 1, one), map(4, 4, l.inv());
      target = -l1 / l;
      break;
    case 5:
      map(1, 3, one), map(2, 1, one), map(3, 2, one), map(4, 4, -l1.inv());
      target = -l1.inv();
      break;
    default:
      map(1, 1, one), map(2, 3, one), map(3, 2, one), map(4, 4, l1.inv());
      target = -l / l1;
      break;
  }
  return {target, s};
}

std::size_t table_der(std::string_view name, const std::optional<Scalar>& lambda) {
  const CatalogEntry& e = catalog_entry(name);
  if (!e.family) {
    if (!e.tableDer) throw Error(Errc::PreconditionViolated, e.name + " has no printed derivation dimension");
    return *e.tableDer;
  }
  if (!lambda) throw Error(Errc::MissingParameter, "family value depends on lambda");
  const Scalar& l = *lambda;
  if (l == Scalar(1) || l == Scalar(-2) || l == Scalar(Rational(-1, 2))) return 8;
  return 6;
}

const std::vector<Scalar>& family_lambda_samples() {
  static const std::vector<Scalar> s = {Scalar(1), Scalar(-2), Scalar(Rational(-1, 2)), Scalar(2), Scalar(3), Scalar(5), Scalar::i()};
  return s;
}

const std::vector<Scalar>& table1_lambda_samples() {
  static const std::vector<Scalar> s = {Scalar(1), Scalar(-2), Scalar(Rational(-1, 2)), Scalar(2), Scalar(3)};
  return s;
}

std::vector<Table1Row> table1_report() {
  std::vector<Table1Row> rows;
  for (const auto& e : catalog()) {
    if (e.dim != 4) continue;
    if (!e.family) {
      rows.push_back({e.name, std::nullopt, table_text(e), derivations(instantiate(e.name)).dimension, *e.tableDer});
      continue;
    }
    for (const auto& l : table1_lambda_samples())
      rows.push_back({e.name, l, table_text(e), derivations(instantiate(e.name, l)).dimension, table_der(e.name, l)});
  }
  return rows;
}

std::string_view confidence_name(Confidence c) {
  return c == Confidence::Certified ? "certified" : "fingerprint-only";
}

const Fingerprint& catalog_fingerprint(std::string_view name, const std::optional<Scalar>& lambda) {
  static std::mutex mu;
  static std::map<std::string, Fingerprint> cache;
  std::string key = std::string(name) + (lambda ? "|" + lambda->to_string() : "");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Fingerprint f = fingerprint(instantiate(name, lambda));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(f)).first->second;
}

}  // namespace lts
