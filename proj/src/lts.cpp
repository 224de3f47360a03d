#include "lts/lts.hpp"

#include <map>
#include <optional>

namespace lts {

Lts::Lts(std::size_t n, std::vector<Scalar> constants) : n_(n), c_(std::move(constants)) {
  if (c_.size() != n * n * n * n) throw Error(Errc::DimensionMismatch, "constants tensor must have n^4 entries");
}

Lts& Lts::verify() {
  AxiomReport r = check_axioms(*this);
  if (!r.pass) throw Error(Errc::AxiomViolation, r.to_string());
  verified_ = true;
  return *this;
}

Vec<Scalar> Lts::product(std::size_t i, std::size_t j, std::size_t k) const {
  auto it = c_.begin() + static_cast<std::ptrdiff_t>(index(i, j, k));
  return Vec<Scalar>(it, it + static_cast<std::ptrdiff_t>(n_));
}

bool Lts::is_abelian() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Lts::uses_imaginary() const {
  for (const auto& x : c_)
    if (!x.is_real()) return true;
  return false;
}

namespace {

bool is_zero_vec(const Vec<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec<Scalar> negated(Vec<Scalar> v) {
  for (auto& x : v) x = -x;
  return v;
}

std::string vec_string(const Vec<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

Lts complete_table(std::size_t n, const std::vector<Generator>& generators) {
  Lts T = complete_table_unchecked(n, generators);
  T.verify();
  return T;
}

Lts complete_table_unchecked(std::size_t n, const std::vector<Generator>& generators) {
  const std::size_t n3 = n * n * n;
  std::vector<std::optional<Vec<Scalar>>> known(n3);
  auto at = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  auto label = [](std::size_t i, std::size_t j, std::size_t k) {
    return "[e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" + std::to_string(k + 1) + "]";
  };
  bool changed = false;
  auto assign = [&](std::size_t i, std::size_t j, std::size_t k, const Vec<Scalar>& v) {
    auto& slot = known[at(i, j, k)];
    if (slot) {
      if (*slot != v)
        throw Error(Errc::InconsistentTable, label(i, j, k) + " forced to both " + vec_string(*slot) + " and " + vec_string(v));
      return;
    }
    slot = v;
    changed = true;
  };

  for (const auto& g : generators) {
    for (int a : g.args)
      if (a < 1 || static_cast<std::size_t>(a) > n)
        throw Error(Errc::DimensionMismatch, "generator index " + std::to_string(a) + " out of range 1.." + std::to_string(n));
    if (g.value.size() != n) throw Error(Errc::DimensionMismatch, "generator value must have length " + std::to_string(n));
    assign(static_cast<std::size_t>(g.args[0] - 1), static_cast<std::size_t>(g.args[1] - 1),
           static_cast<std::size_t>(g.args[2] - 1), g.value);
  }
  const Vec<Scalar> zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) assign(i, i, k, zero);

  do {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto& cur = known[at(i, j, k)];
          if (cur) assign(j, i, k, negated(*cur));
          // Cyclic identity: any two of the three terms determine the third.
          const auto& a = known[at(i, j, k)];
          const auto& b = known[at(j, k, i)];
          const auto& c = known[at(k, i, j)];
          int count = (a ? 1 : 0) + (b ? 1 : 0) + (c ? 1 : 0);
          if (count != 2) continue;
          Vec<Scalar> s(n);
          for (const auto* o : {&a, &b, &c})
            if (*o)
              for (std::size_t p = 0; p < n; ++p) s[p] -= (**o)[p];
          if (!a) assign(i, j, k, s);
          else if (!b) assign(j, k, i, s);
          else assign(k, i, j, s);
        }
  } while (changed);

  std::vector<Scalar> constants(n3 * n);
  for (std::size_t t = 0; t < n3; ++t)
    if (known[t])
      for (std::size_t p = 0; p < n; ++p) constants[t * n + p] = (*known[t])[p];
  return Lts(n, std::move(constants));
}

std::string AxiomReport::to_string() const {
  if (pass) return "(A1)(A2)(A3) pass";
  std::string s = "(" + identity + ") violated at (";
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + std::to_string(tuple[i]);
  return s + "), residual " + vec_string(residual);
}

namespace {

std::optional<AxiomReport> check_a1_a2(const Lts& T) {
  const std::size_t n = T.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<Scalar> r(n);
        for (std::size_t p = 0; p < n; ++p) r[p] = T.c(i, j, k, p) + T.c(j, i, k, p);
        if (!is_zero_vec(r))
          return AxiomReport{false, "A1", {int(i + 1), int(j + 1), int(k + 1)}, r};
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<Scalar> r(n);
        for (std::size_t p = 0; p < n; ++p) r[p] = T.c(i, j, k, p) + T.c(j, k, i, p) + T.c(k, i, j, p);
        if (!is_zero_vec(r))
          return AxiomReport{false, "A2", {int(i + 1), int(j + 1), int(k + 1)}, r};
      }
  return std::nullopt;
}

// Residual of (A3) on basis vectors (u,v,x,y,z).
Vec<Scalar> a3_residual(const Lts& T, std::size_t u, std::size_t v, std::size_t x, std::size_t y, std::size_t z) {
  const std::size_t n = T.dim();
  Vec<Scalar> r(n);
  for (std::size_t p = 0; p < n; ++p) {
    const Scalar& a = T.c(x, y, z, p);
    if (!a.is_zero())
      for (std::size_t q = 0; q < n; ++q) r[q] += a * T.c(u, v, p, q);
    const Scalar& b = T.c(u, v, x, p);
    if (!b.is_zero())
      for (std::size_t q = 0; q < n; ++q) r[q] -= b * T.c(p, y, z, q);
    const Scalar& c = T.c(u, v, y, p);
    if (!c.is_zero())
      for (std::size_t q = 0; q < n; ++q) r[q] -= c * T.c(x, p, z, q);
    const Scalar& d = T.c(u, v, z, p);
    if (!d.is_zero())
      for (std::size_t q = 0; q < n; ++q) r[q] -= d * T.c(x, y, p, q);
  }
  return r;
}

// First (A3) violation with u fixed, in lexicographic order of (v,x,y,z).
std::optional<AxiomReport> a3_for_u(const Lts& T, std::size_t u) {
  const std::size_t n = T.dim();
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Vec<Scalar> r = a3_residual(T, u, v, x, y, z);
          if (!is_zero_vec(r))
            return AxiomReport{false, "A3", {int(u + 1), int(v + 1), int(x + 1), int(y + 1), int(z + 1)}, r};
        }
  return std::nullopt;
}

}  // namespace

AxiomReport check_axioms_serial(const Lts& T) {
  if (auto r = check_a1_a2(T)) return *r;
  for (std::size_t u = 0; u < T.dim(); ++u)
    if (auto r = a3_for_u(T, u)) return *r;
  return {};
}

AxiomReport check_axioms(const Lts& T) {
  if (auto r = check_a1_a2(T)) return *r;
  const long n = static_cast<long>(T.dim());
  std::vector<std::optional<AxiomReport>> found(T.dim());
#pragma omp parallel for schedule(dynamic)
  for (long u = 0; u < n; ++u) found[static_cast<std::size_t>(u)] = a3_for_u(T, static_cast<std::size_t>(u));
  for (auto& f : found)
    if (f) return *f;
  return {};
}

Vec<Scalar> eval(const Lts& T, const Vec<Scalar>& x, const Vec<Scalar>& y, const Vec<Scalar>& z) {
  const std::size_t n = T.dim();
  if (x.size() != n || y.size() != n || z.size() != n)
    throw Error(Errc::DimensionMismatch, "eval arguments must have length " + std::to_string(n));
  Vec<Scalar> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (z[k].is_zero()) continue;
        Scalar w = xy * z[k];
        for (std::size_t p = 0; p < n; ++p)
          if (!T.c(i, j, k, p).is_zero()) out[p] += w * T.c(i, j, k, p);
      }
    }
  }
  return out;
}

Subspace annihilator(const Lts& T) {
  const std::size_t n = T.dim();
  std::vector<Vec<Scalar>> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < n; ++p) {
        Vec<Scalar> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = T.c(i, j, k, p);
        rows.push_back(std::move(r));
      }
  return Subspace::kernel(n, rows);
}

Subspace derived(const Lts& T) {
  const std::size_t n = T.dim();
  std::vector<Vec<Scalar>> prods;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) prods.push_back(T.product(i, j, k));
  return Subspace::span(n, prods);
}

Subspace bracket_with(const Lts& T, const Subspace& X) {
  const std::size_t n = T.dim();
  std::vector<Vec<Scalar>> prods;
  Vec<Scalar> ej(n), ek(n);
  for (const auto& b : X.basis())
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        ej.assign(n, Scalar());
        ek.assign(n, Scalar());
        ej[j] = 1;
        ek[k] = 1;
        prods.push_back(eval(T, b, ej, ek));
      }
  return Subspace::span(n, prods);
}

NilpotencyReport nilpotency(const Lts& T) {
  NilpotencyReport rep;
  Subspace cur = Subspace::whole(T.dim());
  rep.series.push_back(cur);
  int m = 0;
  while (!cur.is_zero()) {
    Subspace next = bracket_with(T, cur);
    if (next.dim() == cur.dim()) {
      rep.nilpotent = false;
      rep.index = -1;
      return rep;
    }
    cur = std::move(next);
    rep.series.push_back(cur);
    ++m;
  }
  rep.nilpotent = true;
  rep.index = m;
  return rep;
}

DerivationSpace derivations(const Lts& T) {
  const std::size_t n = T.dim();
  const std::size_t m = n * n;
  auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
  RowEchelon<Scalar> ech(m);
  for (std::size_t i = 0; i < n && !ech.full(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) {
          Vec<Scalar> row(m);
          for (std::size_t p = 0; p < n; ++p) row[var(r, p)] += T.c(i, j, k, p);
          for (std::size_t q = 0; q < n; ++q) {
            row[var(q, i)] -= T.c(q, j, k, r);
            row[var(q, j)] -= T.c(i, q, k, r);
            row[var(q, k)] -= T.c(i, j, q, r);
          }
          ech.add(std::move(row));
        }
  DerivationSpace out;
  for (const auto& v : ech.nullspace()) {
    ScalarMatrix D(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) D(a, b) = v[var(a, b)];
    out.basis.push_back(std::move(D));
  }
  out.dimension = out.basis.size();
  return out;
}

std::size_t orbit_dimension(const Lts& T) { return T.dim() * T.dim() - derivations(T).dimension; }

Lts change_basis(const Lts& T, const ScalarMatrix& g) {
  const std::size_t n = T.dim();
  if (g.rows() != n || g.cols() != n) throw Error(Errc::DimensionMismatch, "basis change must be " + std::to_string(n) + "x" + std::to_string(n));
  ScalarMatrix h = g.inverse();
  std::vector<Scalar> d = pullback_constants(n, T.constants(), h);
  std::vector<Scalar> out(d.size());
  for (std::size_t t = 0; t < n * n * n; ++t)
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar& x = d[t * n + q];
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < n; ++p)
        if (!g(p, q).is_zero()) out[t * n + p] += g(p, q) * x;
    }
  Lts R(n, std::move(out));
  R.mark_verified(T.verified());
  return R;
}

Lts direct_sum(const Lts& a, const Lts& b) {
  const std::size_t na = a.dim(), n = a.dim() + b.dim();
  Lts s = Lts::zero(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t p = 0; p < na; ++p) s.c(i, j, k, p) = a.c(i, j, k, p);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k)
        for (std::size_t p = 0; p < b.dim(); ++p) s.c(na + i, na + j, na + k, na + p) = b.c(i, j, k, p);
  s.mark_verified(a.verified() && b.verified());
  return s;
}

Lts lts_from_lie(std::size_t n, const std::vector<Scalar>& b) {
  if (b.size() != n * n * n) throw Error(Errc::DimensionMismatch, "Lie bracket constants must have n^3 entries");
  auto B = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& { return b[(i * n + j) * n + k]; };
  auto ij = [](std::size_t i, std::size_t j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (B(i, j, k) + B(j, i, k) != Scalar(0))
          throw Error(Errc::NotALieAlgebra, "bracket not antisymmetric at " + ij(i, j));
  // Jacobi: [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] = 0.
  auto dbl = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t p) {
    Scalar s;
    for (std::size_t q = 0; q < n; ++q)
      if (!B(i, j, q).is_zero()) s += B(i, j, q) * B(q, k, p);
    return s;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t p = 0; p < n; ++p)
          if (!(dbl(i, j, k, p) + dbl(j, k, i, p) + dbl(k, i, j, p)).is_zero())
            throw Error(Errc::NotALieAlgebra, "Jacobi identity fails at (" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
  Lts T = Lts::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t p = 0; p < n; ++p) T.c(i, j, k, p) = dbl(i, j, k, p);
  T.verify();
  return T;
}

}  // namespace lts
