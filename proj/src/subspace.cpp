#include "lts/subspace.hpp"

namespace lts {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec<Scalar>>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) {
    if (s.ech_.full()) break;
    s.ech_.add(v);
  }
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec<Scalar> e(ambient);
    e[i] = 1;
    s.ech_.add(std::move(e));
  }
  return s;
}

Subspace Subspace::kernel(std::size_t ambient, const std::vector<Vec<Scalar>>& rows) {
  RowEchelon<Scalar> ech(ambient);
  for (const auto& r : rows) {
    if (ech.full()) break;
    ech.add(r);
  }
  return span(ambient, ech.nullspace());
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.basis())
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.n_ != n_) throw Error(Errc::DimensionMismatch, "subspaces in different ambient spaces");
  auto eq = equations();
  auto eo = o.equations();
  eq.insert(eq.end(), eo.begin(), eo.end());
  return kernel(n_, eq);
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.n_ != n_) throw Error(Errc::DimensionMismatch, "subspaces in different ambient spaces");
  auto b = basis();
  auto bo = o.basis();
  b.insert(b.end(), bo.begin(), bo.end());
  return span(n_, b);
}

Subspace Subspace::image(const ScalarMatrix& g) const {
  if (g.cols() != n_) throw Error(Errc::DimensionMismatch, "matrix does not act on this space");
  std::vector<Vec<Scalar>> img;
  for (const auto& v : basis()) img.push_back(g * v);
  return span(g.rows(), img);
}

std::string Subspace::to_string() const {
  std::string s = "span(";
  bool first = true;
  for (const auto& v : basis()) {
    s += first ? "[" : ", [";
    first = false;
    for (std::size_t j = 0; j < v.size(); ++j) s += (j ? "," : "") + v[j].to_string();
    s += "]";
  }
  return s + ")";
}

}  // namespace lts
