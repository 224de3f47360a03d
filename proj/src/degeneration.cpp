#include "lts/degeneration.hpp"

#include <sstream>

#include "lts/error.hpp"

namespace lts {

ParametrizedBasis parse_basis(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  ParametrizedBasis b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(Errc::DimensionMismatch, "basis must be square");
    for (std::size_t j = 0; j < n; ++j) b(i, j) = RationalFunction::parse(rows[i][j]);
  }
  return b;
}

std::vector<std::vector<std::string>> basis_strings(const ParametrizedBasis& b) {
  std::vector<std::vector<std::string>> out(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out[i].push_back(b(i, j).to_string());
  return out;
}

std::vector<RationalFunction> lift_constants(const Lts& T) {
  std::vector<RationalFunction> out;
  out.reserve(T.constants().size());
  for (const auto& x : T.constants()) out.emplace_back(x);
  return out;
}

namespace {

Polynomial lcm(const Polynomial& a, const Polynomial& b) { return divmod(a, gcd(a, b)).first * b; }

// Determinant by cofactor expansion along the first row; no division needed.
Polynomial laplace_det(const Matrix<Polynomial>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  if (n == 1) return m(0, 0);
  Polynomial det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Matrix<Polynomial> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Polynomial term = m(0, j) * laplace_det(minor);
    if (j % 2) det -= term;
    else det += term;
  }
  return det;
}

Matrix<Polynomial> adjugate(const Matrix<Polynomial>& m) {
  const std::size_t n = m.rows();
  Matrix<Polynomial> adj(n, n);
  if (n == 1) {
    adj(0, 0) = Polynomial(1);
    return adj;
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Matrix<Polynomial> minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == p) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != q) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      Polynomial d = laplace_det(minor);
      adj(q, p) = (p + q) % 2 ? Polynomial() - d : d;
    }
  return adj;
}

}  // namespace

// With E = P/D over one common denominator D and c = C/d, the transported
// constants are pullback(C, P^T) adj(P) / (d D^2 det P). Everything before
// the final division is polynomial arithmetic.
std::vector<RationalFunction> transport_constants(std::size_t n, const std::vector<RationalFunction>& c,
                                                  const ParametrizedBasis& basis) {
  if (basis.rows() != n || basis.cols() != n || c.size() != n * n * n * n)
    throw Error(Errc::DimensionMismatch, "basis and constants disagree on the dimension");
  Polynomial D(1), d(1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) D = lcm(D, basis(i, j).den());
  for (const auto& x : c)
    if (!x.den().is_constant()) d = lcm(d, x.den());
  Matrix<Polynomial> P(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) P(j, i) = basis(i, j).num() * divmod(D, basis(i, j).den()).first;
  Polynomial det = laplace_det(P);
  if (det.is_zero()) throw Error(Errc::SingularBasis, "det E(t) is identically zero");
  // P holds the transpose, so adj(P)^T = adj(P^T) plays the role of the inverse basis.
  Matrix<Polynomial> adj = adjugate(P).transpose();

  std::vector<Polynomial> C(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    C[k] = c[k].num() * divmod(d, c[k].den()).first;
  }
  std::vector<Polynomial> v = pullback_constants(n, C, P);
  const Polynomial denom = d * D * D * det;
  std::vector<RationalFunction> w(v.size());
  for (std::size_t base = 0; base < v.size(); base += n)
    for (std::size_t p = 0; p < n; ++p) {
      Polynomial acc;
      for (std::size_t q = 0; q < n; ++q)
        if (!v[base + q].is_zero() && !adj(q, p).is_zero()) acc += v[base + q] * adj(q, p);
      if (!acc.is_zero()) w[base + p] = RationalFunction(std::move(acc), denom);
    }
  return w;
}

std::string SystemRef::label() const {
  std::string s = name;
  if (lambda) s += "^" + lambda->to_string();
  if (indexFn) s += "^(" + indexFn->to_string() + ")";
  return s;
}

std::vector<RationalFunction> source_constants(const SystemRef& s) {
  if (s.indexFn) {
    if (!catalog_entry(s.name).family)
      throw Error(Errc::PreconditionViolated, s.name + " is not a family");
    if (s.lambda) throw Error(Errc::PreconditionViolated, "give either lambda or an index function");
    return instantiate_family(*s.indexFn);
  }
  return lift_constants(instantiate(s.name, s.lambda));
}

namespace {

std::string slot_name(std::size_t n, std::size_t idx) {
  std::size_t p = idx % n, k = idx / n % n, j = idx / (n * n) % n, i = idx / (n * n * n);
  return "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ";" +
         std::to_string(p + 1) + ")";
}

}  // namespace

DegenerationCheck verify_degeneration(const DegenerationWitness& w) {
  if (w.target.indexFn) throw Error(Errc::PreconditionViolated, "target must be a single system");
  std::vector<RationalFunction> src = source_constants(w.source);
  const Lts target = instantiate(w.target.name, w.target.lambda);
  const std::size_t n = target.dim();
  std::vector<RationalFunction> moved = transport_constants(n, src, w.basis);
  DegenerationCheck r;
  std::vector<Scalar> lim(moved.size());
  for (std::size_t idx = 0; idx < moved.size(); ++idx) {
    try {
      lim[idx] = limit_at_zero(moved[idx]);
    } catch (const Error& e) {
      if (e.kind() != Errc::PoleAtZero) throw;
      r.poles.push_back(slot_name(n, idx));
      continue;
    }
    if (!(lim[idx] == target.constants()[idx])) r.mismatches.push_back(slot_name(n, idx));
  }
  if (r.poles.empty()) r.limit = std::move(lim);
  r.pass = r.poles.empty() && r.mismatches.empty();
  return r;
}

std::string DegenerationCheck::to_string() const {
  if (pass) return "limit matches target";
  std::ostringstream os;
  if (!poles.empty()) {
    os << "poles at t=0:";
    for (const auto& p : poles) os << ' ' << p;
  }
  if (!mismatches.empty()) {
    if (!poles.empty()) os << "; ";
    os << "limit differs at:";
    for (const auto& m : mismatches) os << ' ' << m;
  }
  return os.str();
}

DegenerationWitness retarget(const DegenerationWitness& w, const ScalarMatrix& g, const SystemRef& target) {
  ScalarMatrix ginvT = g.inverse().transpose();
  RfMatrix lifted(ginvT.rows(), ginvT.cols());
  for (std::size_t i = 0; i < ginvT.rows(); ++i)
    for (std::size_t j = 0; j < ginvT.cols(); ++j) lifted(i, j) = RationalFunction(ginvT(i, j));
  return {w.source, target, lifted * w.basis};
}

NecessaryReport necessary_conditions(const Lts& a, const Lts& b, bool fromFamily) {
  if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "systems of different dimension");
  Fingerprint fa = fingerprint(a), fb = fingerprint(b);
  NecessaryReport r;
  r.sameFingerprint = fa == fb;
  r.conditions.push_back({"dim Der", fa.dimDer, fb.dimDer, fa.dimDer < fb.dimDer || r.sameFingerprint || (fromFamily && fa.dimDer == fb.dimDer)});
  r.conditions.push_back({"dim Ann", fa.dimAnn, fb.dimAnn, fa.dimAnn <= fb.dimAnn});
  r.conditions.push_back({"dim T^(1)", fa.dimDerived, fb.dimDerived, fa.dimDerived >= fb.dimDerived});
  for (const auto& c : r.conditions) r.consistent = r.consistent && c.holds;
  return r;
}

std::string NecessaryReport::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const auto& c = conditions[i];
    if (i) os << ", ";
    os << c.invariant << ' ' << c.source << " -> " << c.target << (c.holds ? " ok" : " violated");
  }
  if (sameFingerprint) os << " (same fingerprint)";
  return os.str();
}

namespace {

DegenerationWitness make(SystemRef src, SystemRef dst, const std::vector<std::vector<std::string>>& rows) {
  return {std::move(src), std::move(dst), parse_basis(rows)};
}

SystemRef fixed(const char* name) { return {name, std::nullopt, std::nullopt}; }
SystemRef member(const Scalar& lambda) { return {"T4,6", lambda, std::nullopt}; }

}  // namespace

DegenerationWitness family_to_t44(const Scalar& lambda) {
  if (lambda == Scalar(1) || lambda == Scalar(-2) || lambda == Scalar(Rational(-1, 2)))
    throw Error(Errc::SingularParameter, "no T4,4 witness for lambda = " + lambda.to_string());
  const std::string l = "(" + lambda.to_string() + ")";
  return make(member(lambda), fixed("T4,4"),
              {{"0", "1", "0", "0"},
               {"1", "1/(t*(" + l + "-1))", "0", "0"},
               {"-1/(t*(2*" + l + "+1))", "-1/(t^2*(" + l + "^2+" + l + "-2))", "1", "0"},
               {"0", "0", "0", "1/t"}});
}

std::vector<DegenerationWitness> known_degenerations(const Scalar& lambda) {
  std::vector<DegenerationWitness> out;
  out.push_back(make(fixed("T4,7"), member(Scalar(0)),
                     {{"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1/t", "0"}, {"0", "0", "0", "-1/t"}}));
  out.push_back(make(fixed("T4,5"), member(Scalar(1)),
                     {{"1", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "t"}}));
  out.push_back(make(fixed("T4,8"), fixed("T4,3"),
                     {{"t", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "t^2", "0"}, {"0", "0", "0", "t"}}));
  out.push_back(make(fixed("T4,8"), fixed("T4,9"),
                     {{"1", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "0", "t", "0"}, {"0", "0", "0", "t"}}));
  out.push_back(make(fixed("T4,4"), fixed("T4,2"),
                     {{"0", "1", "0", "0"}, {"0", "0", "t", "0"}, {"0", "0", "0", "t"}, {"t", "0", "0", "0"}}));
  out.push_back(make(fixed("T4,9"), fixed("T4,2"),
                     {{"1", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "0", "t", "0"}, {"0", "0", "0", "1"}}));
  out.push_back(make(fixed("T4,3"), fixed("T4,2"),
                     {{"1", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "0", "t", "0"}, {"0", "0", "0", "1"}}));
  out.push_back(make(fixed("T4,2"), fixed("T4,1"),
                     {{"t", "0", "0", "0"}, {"0", "t", "0", "0"}, {"0", "0", "t", "0"}, {"0", "0", "0", "t"}}));
  out.push_back(make(fixed("T4,8"), fixed("T4,4"),
                     {{"0", "0", "1/t", "0"}, {"0", "-i", "0", "0"}, {"t", "0", "0", "0"}, {"0", "0", "0", "t"}}));
  out.push_back(make(member(Scalar(1)), fixed("T4,2"),
                     {{"t", "0", "-1/(3*t)", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "1", "0"}}));
  out.push_back(make(fixed("T4,7"), fixed("T4,8"),
                     {{"1", "-1/(2*t^3)", "-1/(4*t^5)", "0"},
                      {"0", "1/(2*t)", "-1/(4*t^3)", "0"},
                      {"0", "0", "1/(2*t)", "0"},
                      {"0", "0", "0", "-1/(4*t^4)"}}));
  out.push_back(make(fixed("T4,5"), fixed("T4,4"),
                     {{"t/3", "0", "0", "0"}, {"0", "1", "0", "0"}, {"-1/(3*t)", "1/t", "1", "0"}, {"0", "0", "0", "1"}}));
  out.push_back(family_to_t44(lambda));
  return out;
}

DegenerationWitness family_to_t45() {
  SystemRef src{"T4,6", std::nullopt, RationalFunction::parse("2/(1+t)-1")};
  return make(std::move(src), fixed("T4,5"),
              {{"1/2", "1/(2*t)", "0", "0"},
               {"-1/(2*t)", "1/(2*t^2)", "0", "0"},
               {"0", "0", "1", "0"},
               {"0", "0", "0", "1/(2*t^2)"}});
}

DegenerationWitness t32_to_t31() {
  return make(fixed("T3,2"), fixed("T3,1"), {{"t", "0", "0"}, {"0", "t", "0"}, {"0", "0", "t"}});
}

}  // namespace lts
