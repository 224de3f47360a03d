#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lts/matrix.hpp"
#include "lts/subspace.hpp"

namespace lts {

// Lie triple system on Q(i)^n given by structure constants: c(i,j,k,p) is the
// coefficient of e_p in [e_i,e_j,e_k]. Indices are 0-based in code and 1-based
// in every text or JSON rendering.
class Lts {
 public:
  Lts() = default;
  // Throws DimensionMismatch when constants.size() != n^4. Does not check
  // the axioms; use verify() or complete_table for that.
  Lts(std::size_t n, std::vector<Scalar> constants);
  static Lts zero(std::size_t n) { return Lts(n, std::vector<Scalar>(n * n * n * n)); }

  std::size_t dim() const { return n_; }
  bool verified() const { return verified_; }
  // Runs check_axioms and sets the flag; throws AxiomViolation on failure.
  Lts& verify();
  // For results that are correct by construction from verified inputs.
  Lts& mark_verified(bool v = true) {
    verified_ = v;
    return *this;
  }

  std::size_t index(std::size_t i, std::size_t j, std::size_t k, std::size_t p = 0) const {
    return ((i * n_ + j) * n_ + k) * n_ + p;
  }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k, std::size_t p) const { return c_[index(i, j, k, p)]; }
  Scalar& c(std::size_t i, std::size_t j, std::size_t k, std::size_t p) { return c_[index(i, j, k, p)]; }
  const std::vector<Scalar>& constants() const { return c_; }
  // [e_i,e_j,e_k] as a coordinate vector.
  Vec<Scalar> product(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_abelian() const;
  bool uses_imaginary() const;

  friend bool operator==(const Lts& a, const Lts& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> c_;
  bool verified_ = false;
};

// One listed product [e_i,e_j,e_k] = value, with 1-based indices.
struct Generator {
  std::array<int, 3> args;
  Vec<Scalar> value;
};

// Closes a partial table under skew-symmetry and the cyclic identity, sets
// undetermined products to zero and checks the axioms.
// Throws InconsistentTable or AxiomViolation.
Lts complete_table(std::size_t n, const std::vector<Generator>& generators);
// The same closure without the final axiom check.
Lts complete_table_unchecked(std::size_t n, const std::vector<Generator>& generators);

struct AxiomReport {
  bool pass = true;
  std::string identity;   // "A1", "A2" or "A3" on failure
  std::vector<int> tuple;  // 1-based witness indices
  Vec<Scalar> residual;
  std::string to_string() const;
};

AxiomReport check_axioms(const Lts& T);
AxiomReport check_axioms_serial(const Lts& T);

Vec<Scalar> eval(const Lts& T, const Vec<Scalar>& x, const Vec<Scalar>& y, const Vec<Scalar>& z);

Subspace annihilator(const Lts& T);
Subspace derived(const Lts& T);
// Span of [X,T,T] for a subspace X.
Subspace bracket_with(const Lts& T, const Subspace& X);

struct NilpotencyReport {
  bool nilpotent = false;
  int index = 0;
  std::vector<Subspace> series;
};
NilpotencyReport nilpotency(const Lts& T);

struct DerivationSpace {
  std::size_t dimension = 0;
  std::vector<ScalarMatrix> basis;
};
DerivationSpace derivations(const Lts& T);
std::size_t orbit_dimension(const Lts& T);

// Constants of g*mu with (g*mu)(x,y,z) = g mu(g^-1 x, g^-1 y, g^-1 z).
// Throws SingularMatrix.
Lts change_basis(const Lts& T, const ScalarMatrix& g);
Lts direct_sum(const Lts& a, const Lts& b);

// Lie bracket constants b[(i*n+j)*n+k] = coefficient of e_k in [e_i,e_j].
// Throws NotALieAlgebra.
Lts lts_from_lie(std::size_t n, const std::vector<Scalar>& bracket);

// d(i,j,k) = mu(h e_i, h e_j, h e_k) in the original coordinates, for any
// dense tensor of constants over a commutative ring K.
template <class K>
std::vector<K> pullback_constants(std::size_t n, const std::vector<K>& c, const Matrix<K>& h) {
  // Contract one slot at a time; each pass is O(n^5).
  auto contract = [&](const std::vector<K>& in, int slot) {
    std::vector<K> out(in.size());
    std::size_t stride[3] = {n * n * n, n * n, n};
    std::size_t s = stride[slot];
    for (std::size_t idx = 0; idx < in.size(); ++idx) {
      const K& x = in[idx];
      if (x.is_zero()) continue;
      std::size_t a = (idx / s) % n;
      std::size_t base = idx - a * s;
      for (std::size_t i = 0; i < n; ++i) {
        const K& hai = h(a, i);
        if (hai.is_zero()) continue;
        out[base + i * s] += hai * x;
      }
    }
    return out;
  };
  return contract(contract(contract(c, 0), 1), 2);
}

}  // namespace lts
