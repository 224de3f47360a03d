#include "lts/cohomology.hpp"

namespace lts {

Cocycle::Cocycle(std::size_t n, Vec<Scalar> coords) : n_(n), a_(std::move(coords)) {
  if (a_.size() != coord_count(n)) throw Error(Errc::DimensionMismatch, "cochain has wrong number of coordinates");
}

Cocycle Cocycle::delta(std::size_t n, int i, int j, int k) {
  if (i < 1 || j < 1 || k < 1 || i > int(n) || j > int(n) || k > int(n))
    throw Error(Errc::DimensionMismatch, "Delta index out of range");
  if (i >= j) throw Error(Errc::PreconditionViolated, "Delta_{i,j,k} requires i < j");
  Cocycle c(n);
  c.a_[coord(n, std::size_t(i - 1), std::size_t(j - 1), std::size_t(k - 1))] = 1;
  return c;
}

std::size_t Cocycle::coord(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  std::size_t pair = i * (2 * n - i - 1) / 2 + (j - i - 1);
  return pair * n + k;
}

Scalar Cocycle::value(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return {};
  if (i < j) return a_[coord(n_, i, j, k)];
  return -a_[coord(n_, j, i, k)];
}

Scalar Cocycle::value(std::size_t i, std::size_t j, const Vec<Scalar>& w) const {
  Scalar s;
  if (i == j) return s;
  for (std::size_t k = 0; k < n_; ++k)
    if (!w[k].is_zero()) s += w[k] * value(i, j, k);
  return s;
}

Scalar Cocycle::eval(const Vec<Scalar>& x, const Vec<Scalar>& y, const Vec<Scalar>& z) const {
  if (x.size() != n_ || y.size() != n_ || z.size() != n_) throw Error(Errc::DimensionMismatch, "cochain arguments");
  Scalar s;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      s += x[i] * y[j] * value(i, j, z);
    }
  }
  return s;
}

void Cocycle::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= j) throw Error(Errc::PreconditionViolated, "cochain coordinates need i < j");
  a_[coord(n_, i, j, k)] = v;
}

bool Cocycle::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Cocycle& Cocycle::operator+=(const Cocycle& o) {
  if (o.n_ != n_) throw Error(Errc::DimensionMismatch, "cochains on different spaces");
  for (std::size_t t = 0; t < a_.size(); ++t) a_[t] += o.a_[t];
  return *this;
}

Cocycle& Cocycle::operator-=(const Cocycle& o) {
  if (o.n_ != n_) throw Error(Errc::DimensionMismatch, "cochains on different spaces");
  for (std::size_t t = 0; t < a_.size(); ++t) a_[t] -= o.a_[t];
  return *this;
}

Cocycle& Cocycle::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

std::string Cocycle::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const Scalar& c = a_[coord(n_, i, j, k)];
        if (c.is_zero()) continue;
        std::string d = "D(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
        std::string term;
        if (c.is_one()) term = d;
        else if (c == Scalar(-1)) term = "-" + d;
        else if (c.is_real() || c.re().is_zero()) term = c.to_string() + "*" + d;
        else term = "(" + c.to_string() + ")*" + d;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
      }
  return out.empty() ? "0" : out;
}

bool CochainSpace::contains(const Cocycle& c) const {
  RowEchelon<Scalar> ech(Cocycle::coord_count(n));
  for (const auto& b : basis) ech.add(b.coords());
  return ech.contains(c.coords());
}

namespace {

void add_term(Vec<Scalar>& row, std::size_t n, std::size_t a, std::size_t b, std::size_t c, const Scalar& coeff) {
  if (a == b || coeff.is_zero()) return;
  if (a < b) row[Cocycle::coord(n, a, b, c)] += coeff;
  else row[Cocycle::coord(n, b, a, c)] -= coeff;
}

bool nonzero(const Vec<Scalar>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return true;
  return false;
}

std::vector<Vec<Scalar>> cyclic_rows(const Lts& T) {
  const std::size_t n = T.dim(), m = Cocycle::coord_count(n);
  std::vector<Vec<Scalar>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<Scalar> r(m);
        add_term(r, n, i, j, k, 1);
        add_term(r, n, j, k, i, 1);
        add_term(r, n, k, i, j, 1);
        if (nonzero(r)) rows.push_back(std::move(r));
      }
  return rows;
}

// theta(u,v,[x,y,z]) + theta([v,u,x],y,z) + theta(x,[v,u,y],z) + theta(x,y,[v,u,z]) = 0
// for every v,x,y,z with u fixed.
std::vector<Vec<Scalar>> compat_rows_for_u(const Lts& T, std::size_t u) {
  const std::size_t n = T.dim(), m = Cocycle::coord_count(n);
  std::vector<Vec<Scalar>> rows;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          Vec<Scalar> r(m);
          for (std::size_t p = 0; p < n; ++p) {
            add_term(r, n, u, v, p, T.c(x, y, z, p));
            add_term(r, n, p, y, z, T.c(v, u, x, p));
            add_term(r, n, x, p, z, T.c(v, u, y, p));
            add_term(r, n, x, y, p, T.c(v, u, z, p));
          }
          if (nonzero(r)) rows.push_back(std::move(r));
        }
  return rows;
}

CochainSpace space_from_rows(std::size_t n, const std::vector<Vec<Scalar>>& rows) {
  const std::size_t m = Cocycle::coord_count(n);
  RowEchelon<Scalar> ech(m);
  for (const auto& r : rows) {
    if (ech.full()) break;
    ech.add(r);
  }
  // Nullspace vectors come out one per free coordinate; re-echelon them for a
  // canonical basis.
  RowEchelon<Scalar> sol(m);
  for (const auto& v : ech.nullspace()) sol.add(v);
  CochainSpace s;
  s.n = n;
  for (auto& v : sol.basis()) s.basis.emplace_back(n, std::move(v));
  return s;
}

}  // namespace

std::vector<Vec<Scalar>> cocycle_system_rows_serial(const Lts& T) {
  auto rows = cyclic_rows(T);
  for (std::size_t u = 0; u < T.dim(); ++u) {
    auto part = compat_rows_for_u(T, u);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return rows;
}

std::vector<Vec<Scalar>> cocycle_system_rows(const Lts& T) {
  auto rows = cyclic_rows(T);
  const long n = static_cast<long>(T.dim());
  std::vector<std::vector<Vec<Scalar>>> parts(T.dim());
#pragma omp parallel for schedule(dynamic)
  for (long u = 0; u < n; ++u) parts[std::size_t(u)] = compat_rows_for_u(T, std::size_t(u));
  for (auto& part : parts)
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return rows;
}

bool is_cocycle(const Lts& T, const Cocycle& theta) {
  if (theta.dim() != T.dim()) return false;
  for (const auto& r : cocycle_system_rows(T)) {
    Scalar s;
    for (std::size_t t = 0; t < r.size(); ++t)
      if (!r[t].is_zero()) s += r[t] * theta.coords()[t];
    if (!s.is_zero()) return false;
  }
  return true;
}

CochainSpace cocycle_space(const Lts& T) { return space_from_rows(T.dim(), cocycle_system_rows(T)); }

Cocycle coboundary(const Lts& T, const Vec<Scalar>& f) {
  const std::size_t n = T.dim();
  if (f.size() != n) throw Error(Errc::DimensionMismatch, "linear form has wrong length");
  Cocycle c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar s;
        for (std::size_t p = 0; p < n; ++p)
          if (!f[p].is_zero()) s += f[p] * T.c(i, j, k, p);
        c.set(i, j, k, s);
      }
  return c;
}

CochainSpace coboundary_space(const Lts& T) {
  const std::size_t n = T.dim();
  RowEchelon<Scalar> ech(Cocycle::coord_count(n));
  for (std::size_t p = 0; p < n; ++p) {
    Vec<Scalar> f(n);
    f[p] = 1;
    ech.add(coboundary(T, f).coords());
  }
  CochainSpace s;
  s.n = n;
  for (auto& v : ech.basis()) s.basis.emplace_back(n, std::move(v));
  return s;
}

Cohomology cohomology(const Lts& T) {
  const std::size_t n = T.dim();
  Cohomology h;
  CochainSpace Z = cocycle_space(T);
  CochainSpace B = coboundary_space(T);
  h.dimZ3 = Z.dim();
  h.dimB3 = B.dim();
  RowEchelon<Scalar> modB(Cocycle::coord_count(n));
  for (const auto& b : B.basis) modB.add(b.coords());
  RowEchelon<Scalar> acc = modB;
  h.representatives.n = n;
  for (const auto& z : Z.basis) {
    Vec<Scalar> r = z.coords();
    modB.reduce(r);
    if (acc.add(r)) h.representatives.basis.emplace_back(n, std::move(r));
  }
  h.dimH3 = h.representatives.dim();
  return h;
}

bool classes_independent(const Lts& T, const std::vector<Cocycle>& thetas) {
  RowEchelon<Scalar> ech(Cocycle::coord_count(T.dim()));
  for (const auto& b : coboundary_space(T).basis) ech.add(b.coords());
  for (const auto& t : thetas)
    if (!ech.add(t.coords())) return false;
  return true;
}

bool is_coboundary(const Lts& T, const Cocycle& theta) { return coboundary_space(T).contains(theta); }

Subspace radical(const Cocycle& theta) {
  const std::size_t n = theta.dim();
  std::vector<Vec<Scalar>> rows;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Vec<Scalar> r(n);
      for (std::size_t i = 0; i < n; ++i) r[i] = theta.value(i, j, k);
      rows.push_back(std::move(r));
    }
  return Subspace::kernel(n, rows);
}

Cocycle pullback(const ScalarMatrix& phi, const Cocycle& theta) {
  const std::size_t n = theta.dim();
  if (phi.rows() != n || phi.cols() != n) throw Error(Errc::DimensionMismatch, "map has wrong size");
  Cocycle out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.set(i, j, k, theta.eval(phi.col(i), phi.col(j), phi.col(k)));
  return out;
}

bool is_automorphism(const Lts& T, const ScalarMatrix& phi) {
  try {
    return change_basis(T, phi) == T;
  } catch (const Error& e) {
    if (e.kind() == Errc::SingularMatrix) return false;
    throw;
  }
}

Cocycle aut_action(const Lts& T, const ScalarMatrix& phi, const Cocycle& theta) {
  if (theta.dim() != T.dim()) throw Error(Errc::DimensionMismatch, "cochain and system dimensions differ");
  if (change_basis(T, phi) != T) throw Error(Errc::NotAnAutomorphism, "map does not preserve the triple product");
  return pullback(phi, theta);
}

std::vector<ScalarMatrix> matrix_form(const Cocycle& theta) {
  const std::size_t n = theta.dim();
  std::vector<ScalarMatrix> blocks(n, ScalarMatrix(n, n));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) blocks[t](i, j) = theta.value(i, j, t);
  return blocks;
}

ScalarMatrix a_theta(const Lts& T, const Cocycle& theta) {
  if (T.dim() != 3 || !T.is_abelian() || theta.dim() != 3)
    throw Error(Errc::NotAbelianDim3, "A_theta needs a cochain on the 3-dimensional abelian system");
  auto a = [&](int i, int j, int k) { return theta.value(std::size_t(i - 1), std::size_t(j - 1), std::size_t(k - 1)); };
  if (a(1, 3, 2) != a(1, 2, 3) + a(2, 3, 1))
    throw Error(Errc::RelationViolated, "a132 = a123 + a231 fails");
  ScalarMatrix A(3, 3);
  for (int k = 1; k <= 3; ++k) {
    A(0, std::size_t(k - 1)) = a(2, 3, k);
    A(1, std::size_t(k - 1)) = -a(1, 3, k);
    A(2, std::size_t(k - 1)) = a(1, 2, k);
  }
  return A;
}

}  // namespace lts
