#include "lts/extension.hpp"

namespace lts {

namespace {

void check_spec(const ExtensionSpec& spec) {
  if (spec.thetas.empty()) throw Error(Errc::PreconditionViolated, "extension needs at least one cocycle");
  for (std::size_t t = 0; t < spec.thetas.size(); ++t) {
    if (spec.thetas[t].dim() != spec.base.dim())
      throw Error(Errc::DimensionMismatch, "cocycle " + std::to_string(t + 1) + " lives on a different dimension");
    if (!is_cocycle(spec.base, spec.thetas[t]))
      throw Error(Errc::NotClosed, "component " + std::to_string(t + 1) + " is not a cocycle: " + spec.thetas[t].to_string());
  }
}

}  // namespace

Lts extend(const ExtensionSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.base.dim(), s = spec.thetas.size(), N = n + s;
  Lts T = Lts::zero(N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t p = 0; p < n; ++p) T.c(i, j, k, p) = spec.base.c(i, j, k, p);
        for (std::size_t t = 0; t < s; ++t) T.c(i, j, k, n + t) = spec.thetas[t].value(i, j, k);
      }
  T.mark_verified(spec.base.verified());
  return T;
}

Subspace radical_annihilator_meet(const ExtensionSpec& spec) {
  Subspace meet = annihilator(spec.base);
  for (const auto& th : spec.thetas) meet = meet.intersect(radical(th));
  return meet;
}

Subspace extension_annihilator(const ExtensionSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.base.dim(), N = n + spec.thetas.size();
  std::vector<Vec<Scalar>> gens;
  for (auto v : radical_annihilator_meet(spec).basis()) {
    v.resize(N);
    gens.push_back(std::move(v));
  }
  for (std::size_t t = n; t < N; ++t) {
    Vec<Scalar> e(N);
    e[t] = 1;
    gens.push_back(std::move(e));
  }
  return Subspace::span(N, gens);
}

bool in_Ts(const ExtensionSpec& spec) {
  check_spec(spec);
  return radical_annihilator_meet(spec).is_zero() && classes_independent(spec.base, spec.thetas);
}

bool has_annihilator_component(const ExtensionSpec& spec) {
  check_spec(spec);
  if (!radical_annihilator_meet(spec).is_zero())
    throw Error(Errc::PreconditionViolated, "radicals of the components meet Ann(base)");
  return !classes_independent(spec.base, spec.thetas);
}

ScalarMatrix normalize_line_2dim(const Scalar& alpha, const Scalar& beta) {
  if (!alpha.is_zero()) return ScalarMatrix{{alpha.inv(), -beta}, {Scalar(0), alpha}};
  if (!beta.is_zero()) return ScalarMatrix{{Scalar(0), Scalar(1)}, {beta.inv(), Scalar(0)}};
  throw Error(Errc::ZeroVector, "(0, 0) spans no line");
}

std::vector<Cocycle> value_action(const ScalarMatrix& psi, const std::vector<Cocycle>& thetas) {
  const std::size_t s = thetas.size();
  if (psi.rows() != s || psi.cols() != s) throw Error(Errc::DimensionMismatch, "value map has wrong size");
  if (psi.determinant().is_zero()) throw Error(Errc::SingularMatrix, "value map is not invertible");
  std::vector<Cocycle> out;
  for (std::size_t i = 0; i < s; ++i) {
    Cocycle c(thetas.empty() ? 0 : thetas[0].dim());
    for (std::size_t j = 0; j < s; ++j)
      if (!psi(i, j).is_zero()) c += psi(i, j) * thetas[j];
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lts
