#include "lts/separating.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lts/error.hpp"
#include "lts/multipoly.hpp"
#include "lts/parallel.hpp"

namespace lts {

namespace {

std::size_t flat(const SeparatingSet& R, const std::array<int, 4>& s) {
  const std::size_t n = R.dim;
  for (int x : s)
    if (x < 1 || static_cast<std::size_t>(x) > n)
      throw Error(Errc::DimensionMismatch, "slot index outside 1.." + std::to_string(n));
  return ((std::size_t(s[0] - 1) * n + std::size_t(s[1] - 1)) * n + std::size_t(s[2] - 1)) * n + std::size_t(s[3] - 1);
}

std::string slot_text(const std::array<int, 4>& s) {
  return "c(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + ";" +
         std::to_string(s[3]) + ")";
}

// Generic check: relations hold on the vector w of any ring element type.
template <class K>
bool satisfies(const SeparatingSet& R, const std::vector<K>& w, const std::vector<bool>& listed) {
  for (const auto& rel : R.equal) {
    K diff = w[flat(R, rel.lhs)];
    diff -= w[flat(R, rel.rhs)] * rel.factor;
    if (!diff.is_zero()) return false;
  }
  if (R.zeroOtherwise)
    for (std::size_t s = 0; s < w.size(); ++s)
      if (!listed[s] && !w[s].is_zero()) return false;
  return true;
}

std::vector<bool> listed_mask(const SeparatingSet& R) {
  std::vector<bool> m(R.dim * R.dim * R.dim * R.dim, false);
  for (auto s : R.listed_slots()) m[s] = true;
  return m;
}

}  // namespace

std::vector<std::size_t> SeparatingSet::listed_slots() const {
  std::set<std::size_t> s;
  for (const auto& rel : equal) {
    s.insert(flat(*this, rel.lhs));
    s.insert(flat(*this, rel.rhs));
  }
  return {s.begin(), s.end()};
}

ScalarMatrix SeparatingSet::relation_matrix() const {
  const std::size_t N = dim * dim * dim * dim;
  std::vector<Vec<Scalar>> rows;
  for (const auto& rel : equal) {
    Vec<Scalar> r(N);
    r[flat(*this, rel.lhs)] += Scalar(1);
    r[flat(*this, rel.rhs)] -= rel.factor;
    rows.push_back(std::move(r));
  }
  if (zeroOtherwise) {
    auto mask = listed_mask(*this);
    for (std::size_t s = 0; s < N; ++s)
      if (!mask[s]) {
        Vec<Scalar> r(N);
        r[s] = Scalar(1);
        rows.push_back(std::move(r));
      }
  }
  return ScalarMatrix::from_rows(rows, N);
}

std::string SeparatingSet::to_string() const {
  std::ostringstream os;
  os << name << ": ";
  for (std::size_t i = 0; i < equal.size(); ++i) {
    const auto& rel = equal[i];
    if (i) os << ", ";
    os << slot_text(rel.lhs) << " = ";
    if (rel.factor == Scalar(-1)) os << "-";
    else if (!rel.factor.is_one()) os << "(" << rel.factor << ")*";
    os << slot_text(rel.rhs);
  }
  if (zeroOtherwise) os << ", all other constants zero";
  return os.str();
}

bool separating_contains(const SeparatingSet& R, const std::vector<Scalar>& c) {
  if (c.size() != R.dim * R.dim * R.dim * R.dim) throw Error(Errc::DimensionMismatch, "constants have wrong size");
  return satisfies(R, c, listed_mask(R));
}

bool separating_contains(const SeparatingSet& R, const Lts& T) { return separating_contains(R, T.constants()); }

std::vector<Vec<Scalar>> separating_basis(const SeparatingSet& R) { return R.relation_matrix().nullspace(); }

std::vector<Scalar> random_point(const SeparatingSet& R, const std::vector<Vec<Scalar>>& basis, Rng& rng) {
  std::vector<Scalar> c(R.dim * R.dim * R.dim * R.dim);
  for (const auto& b : basis) {
    Scalar s = rng.small_scalar();
    if (s.is_zero()) continue;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!b[k].is_zero()) c[k] += s * b[k];
  }
  return c;
}

namespace {

std::optional<ScalarMatrix> borel_trial(const SeparatingSet& R, const std::vector<Vec<Scalar>>& basis,
                                        const std::vector<bool>& mask, std::uint64_t seed, std::size_t trial) {
  Rng rng(seed, trial);
  std::vector<Scalar> mu = random_point(R, basis, rng);
  ScalarMatrix g = rng.lower_triangular(R.dim);
  Lts moved = change_basis(Lts(R.dim, std::move(mu)), g);
  if (satisfies(R, moved.constants(), mask)) return std::nullopt;
  return g;
}

StabilityReport collect(const std::vector<std::optional<ScalarMatrix>>& results) {
  StabilityReport r;
  r.trials = results.size();
  for (const auto& x : results)
    if (x) {
      ++r.failures;
      if (!r.counterexample) r.counterexample = *x;
    }
  r.pass = r.failures == 0;
  return r;
}

MultiPoly poly_det(const Matrix<MultiPoly>& m, std::size_t nvars) {
  const std::size_t n = m.rows();
  if (n == 0) return MultiPoly(nvars, Scalar(1));
  if (n == 1) return m(0, 0);
  MultiPoly acc(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<MultiPoly> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    MultiPoly term = m(0, j) * poly_det(minor, nvars);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

StabilityReport symbolic_stability(const SeparatingSet& R) {
  const std::size_t n = R.dim;
  auto basis = separating_basis(R);
  const std::size_t gvars = n * (n + 1) / 2;
  const std::size_t nvars = gvars + basis.size();
  Matrix<MultiPoly> g(n, n);
  for (std::size_t i = 0, v = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) g(i, j) = MultiPoly::variable(nvars, v++);
  // adj(g) = det(g) g^-1, so g*mu is a nonzero multiple of g mu(adj x, adj y, adj z).
  Matrix<MultiPoly> adj(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<MultiPoly> minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = g(r, c);
        ++rr;
      }
      MultiPoly d = poly_det(minor, nvars);
      adj(j, i) = (i + j) % 2 ? -d : d;
    }
  std::vector<MultiPoly> mu(n * n * n * n, MultiPoly(nvars));
  for (std::size_t m = 0; m < basis.size(); ++m) {
    MultiPoly s = MultiPoly::variable(nvars, gvars + m);
    for (std::size_t k = 0; k < mu.size(); ++k)
      if (!basis[m][k].is_zero()) mu[k] += s * basis[m][k];
  }
  std::vector<MultiPoly> d = pullback_constants(n, mu, adj);
  std::vector<MultiPoly> w(d.size(), MultiPoly(nvars));
  for (std::size_t base = 0; base < d.size(); base += n)
    for (std::size_t q = 0; q < n; ++q) {
      if (d[base + q].is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        if (!g(p, q).is_zero()) w[base + p] += g(p, q) * d[base + q];
    }
  StabilityReport r;
  r.mode = StabilityMode::Symbolic;
  r.trials = 1;
  r.pass = satisfies(R, w, listed_mask(R));
  r.failures = r.pass ? 0 : 1;
  return r;
}

}  // namespace

StabilityReport borel_stability(const SeparatingSet& R, StabilityMode mode, std::size_t trials, std::uint64_t seed) {
  if (mode == StabilityMode::Symbolic) return symbolic_stability(R);
  auto basis = separating_basis(R);
  auto mask = listed_mask(R);
  return collect(run_indexed<std::optional<ScalarMatrix>>(
      trials, [&](std::size_t t) { return borel_trial(R, basis, mask, seed, t); }));
}

StabilityReport borel_stability_serial(const SeparatingSet& R, std::size_t trials, std::uint64_t seed) {
  auto basis = separating_basis(R);
  auto mask = listed_mask(R);
  return collect(run_indexed_serial<std::optional<ScalarMatrix>>(
      trials, [&](std::size_t t) { return borel_trial(R, basis, mask, seed, t); }));
}

std::string StabilityReport::to_string() const {
  std::ostringstream os;
  os << (mode == StabilityMode::Symbolic ? "symbolic" : "randomized") << ' ';
  if (pass) {
    os << "stable";
    if (mode == StabilityMode::Randomized) os << " (" << trials << " trials)";
  } else {
    os << "NOT stable";
    if (mode == StabilityMode::Randomized) os << " (" << failures << "/" << trials << " trials failed)";
    if (counterexample) os << ", g = " << counterexample->to_string();
  }
  return os.str();
}

namespace {

std::optional<ScalarMatrix> escape_trial(const SeparatingSet& R, const Lts& target, const std::vector<bool>& mask,
                                         std::uint64_t seed, std::size_t trial) {
  Rng rng(seed, trial);
  ScalarMatrix g = rng.invertible(R.dim);
  if (satisfies(R, change_basis(target, g).constants(), mask)) return g;
  return std::nullopt;
}

EscapeReport escape_collect(const std::vector<std::optional<ScalarMatrix>>& results) {
  EscapeReport r;
  r.trials = results.size();
  for (const auto& x : results)
    if (x) {
      r.found = true;
      r.witness = *x;
      break;
    }
  return r;
}

}  // namespace

EscapeReport orbit_escape_search(const SeparatingSet& R, const Lts& target, std::size_t trials, std::uint64_t seed) {
  if (target.dim() != R.dim) throw Error(Errc::DimensionMismatch, "target dimension differs from the set");
  auto mask = listed_mask(R);
  return escape_collect(run_indexed<std::optional<ScalarMatrix>>(
      trials, [&](std::size_t t) { return escape_trial(R, target, mask, seed, t); }));
}

EscapeReport orbit_escape_search_serial(const SeparatingSet& R, const Lts& target, std::size_t trials,
                                        std::uint64_t seed) {
  if (target.dim() != R.dim) throw Error(Errc::DimensionMismatch, "target dimension differs from the set");
  auto mask = listed_mask(R);
  return escape_collect(run_indexed_serial<std::optional<ScalarMatrix>>(
      trials, [&](std::size_t t) { return escape_trial(R, target, mask, seed, t); }));
}

namespace {

SlotRelation rel(std::array<int, 4> a, std::array<int, 4> b, Scalar f) { return {a, b, std::move(f)}; }

}  // namespace

SeparatingSet separating_r1() {
  return {"R1",
          4,
          {rel({1, 2, 1, 3}, {2, 1, 1, 3}, -1), rel({1, 2, 1, 4}, {2, 1, 1, 4}, -1),
           rel({1, 2, 2, 4}, {2, 1, 2, 4}, -1), rel({1, 2, 3, 4}, {2, 1, 3, 4}, -1),
           rel({1, 3, 1, 4}, {3, 1, 1, 4}, -1), rel({1, 3, 2, 4}, {3, 1, 2, 4}, -1),
           rel({1, 3, 2, 4}, {1, 2, 3, 4}, 1)},
          true};
}

SeparatingSet separating_r2(const Scalar& lambda) {
  return {"R2(" + lambda.to_string() + ")",
          4,
          {rel({1, 2, 1, 4}, {2, 1, 1, 4}, -1), rel({1, 2, 2, 4}, {2, 1, 2, 4}, -1),
           rel({1, 2, 3, 4}, {2, 1, 3, 4}, -1), rel({1, 2, 3, 4}, {1, 3, 2, 4}, Scalar(1) + lambda),
           rel({1, 3, 1, 4}, {3, 1, 1, 4}, -1), rel({1, 3, 2, 4}, {3, 1, 2, 4}, -1),
           rel({2, 3, 1, 4}, {3, 2, 1, 4}, -1), rel({2, 3, 1, 4}, {1, 3, 2, 4}, -lambda)},
          true};
}

SeparatingSet separating_r3() {
  return {"R3",
          4,
          {rel({1, 2, 1, 3}, {2, 1, 1, 3}, -1), rel({1, 2, 1, 4}, {2, 1, 1, 4}, -1),
           rel({1, 3, 1, 4}, {3, 1, 1, 4}, -1)},
          true};
}

namespace {

SeparatingSet r5_with(std::array<int, 4> rhs132, const char* name) {
  return {name,
          4,
          {rel({1, 2, 1, 4}, {2, 1, 1, 4}, -1), rel({1, 2, 2, 4}, {2, 1, 2, 4}, -1),
           rel({1, 2, 3, 4}, {2, 1, 3, 4}, -1), rel({1, 3, 1, 4}, {3, 1, 1, 4}, -1),
           rel({1, 3, 2, 4}, rhs132, -1), rel({2, 3, 1, 4}, {3, 2, 1, 4}, -1)},
          true};
}

}  // namespace

SeparatingSet separating_r5() { return r5_with({3, 1, 2, 4}, "R5"); }
SeparatingSet separating_r5_as_printed() { return r5_with({1, 3, 2, 4}, "R5 (as printed)"); }

std::vector<NonDegenerationClaim> nondegeneration_claims() {
  auto fixed = [](const char* n) { return SystemRef{n, std::nullopt, std::nullopt}; };
  auto member = [](const Scalar& l) { return SystemRef{"T4,6", l, std::nullopt}; };
  const SystemRef family{"T4,6", std::nullopt, std::nullopt};
  std::vector<NonDegenerationClaim> out;

  NonDegenerationClaim c1{"T4,7 -/-> T4,5, T4,6^lambda (lambda != 0,-1)", fixed("T4,7"), {fixed("T4,5")},
                          separating_r1()};
  for (const auto& l : family_lambda_samples()) c1.targets.push_back(member(l));
  out.push_back(std::move(c1));

  for (const Scalar& l : {Scalar(0), Scalar(2), Scalar(3), Scalar(5), Scalar::i()})
    out.push_back({"T4,6^" + l.to_string() + " -/-> T4,6^1", member(l), {member(Scalar(1))}, separating_r2(l)});

  out.push_back({"T4,9 -/-> T4,3", fixed("T4,9"), {fixed("T4,3")}, separating_r3()});
  out.push_back({"T4,5 -/-> T4,9, T4,3", fixed("T4,5"), {fixed("T4,9"), fixed("T4,3")}, std::nullopt});
  out.push_back({"T4,6^lambda -/-> T4,9, T4,3", family, {fixed("T4,9"), fixed("T4,3")}, std::nullopt});
  out.push_back({"T4,6^* -/-> T4,9, T4,3", family, {fixed("T4,9"), fixed("T4,3")}, separating_r5()});
  return out;
}

ClaimCheck check_claim(const NonDegenerationClaim& claim, std::size_t borelTrials, std::size_t escapeTrials,
                       std::uint64_t seed) {
  ClaimCheck r;
  auto note = [&](bool ok, const std::string& text) {
    r.pass = r.pass && ok;
    r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + text);
  };
  const bool wholeFamily = !claim.source.lambda && !claim.source.indexFn && catalog_entry(claim.source.name).family;

  if (!claim.set) {
    std::vector<Lts> sources;
    if (wholeFamily) {
      sources.push_back(instantiate(claim.source.name, Scalar(0)));
      for (const auto& l : family_lambda_samples()) sources.push_back(instantiate(claim.source.name, l));
    } else {
      sources.push_back(instantiate(claim.source.name, claim.source.lambda));
    }
    for (const auto& t : claim.targets) {
      Lts target = instantiate(t.name, t.lambda);
      bool all = true;
      std::string detail;
      for (const auto& s : sources) {
        NecessaryReport nr = necessary_conditions(s, target);
        all = all && !nr.consistent;
        if (detail.empty()) detail = nr.to_string();
      }
      note(all, "invariants exclude " + t.label() + ": " + detail);
    }
    return r;
  }

  const SeparatingSet& R = *claim.set;
  if (wholeFamily) {
    // Constants are affine in lambda, so the values at 0 and 1 decide membership for all lambda.
    Lts a = instantiate(claim.source.name, Scalar(0)), b = instantiate(claim.source.name, Scalar(1));
    std::vector<Scalar> slope(a.constants().size());
    for (std::size_t k = 0; k < slope.size(); ++k) slope[k] = b.constants()[k] - a.constants()[k];
    note(separating_contains(R, a) && separating_contains(R, slope),
         claim.source.name + "^lambda in " + R.name + " for every lambda");
  } else {
    note(separating_contains(R, instantiate(claim.source.name, claim.source.lambda)),
         claim.source.label() + " in " + R.name);
  }
  StabilityReport st = borel_stability(R, StabilityMode::Randomized, borelTrials, seed);
  note(st.pass, R.name + " Borel " + st.to_string());
  StabilityReport sym = borel_stability(R, StabilityMode::Symbolic, 0, seed);
  note(sym.pass, R.name + " Borel " + sym.to_string());
  for (const auto& t : claim.targets) {
    Lts target = instantiate(t.name, t.lambda);
    note(!separating_contains(R, target), t.label() + " not in " + R.name);
    EscapeReport er = orbit_escape_search(R, target, escapeTrials, seed);
    note(!er.found, "no point of the orbit of " + t.label() + " in " + R.name + " (" +
                        std::to_string(er.trials) + " trials)");
  }
  return r;
}

}  // namespace lts
