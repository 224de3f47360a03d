#pragma once

#include <string>
#include <vector>

#include "lts/lts.hpp"

namespace lts {

// Scalar trilinear cochain stored by its coefficients a(i,j,k) = theta(e_i,e_j,e_k)
// for i < j; the values with i > j follow by antisymmetry and i = j gives 0.
class Cocycle {
 public:
  explicit Cocycle(std::size_t n = 0) : n_(n), a_(coord_count(n)) {}
  Cocycle(std::size_t n, Vec<Scalar> coords);
  // Delta_{i,j,k} with 1-based indices, i < j.
  static Cocycle delta(std::size_t n, int i, int j, int k);

  static std::size_t coord_count(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2 * n; }
  // Coordinate of (i,j,k), 0-based with i < j.
  static std::size_t coord(std::size_t n, std::size_t i, std::size_t j, std::size_t k);

  std::size_t dim() const { return n_; }
  const Vec<Scalar>& coords() const { return a_; }
  // theta(e_i,e_j,e_k) for any 0-based (i,j,k).
  Scalar value(std::size_t i, std::size_t j, std::size_t k) const;
  // theta(e_i,e_j,w) for a vector w.
  Scalar value(std::size_t i, std::size_t j, const Vec<Scalar>& w) const;
  Scalar eval(const Vec<Scalar>& x, const Vec<Scalar>& y, const Vec<Scalar>& z) const;
  // Sets a(i,j,k), 0-based with i < j.
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  bool is_zero() const;

  Cocycle& operator+=(const Cocycle& o);
  Cocycle& operator-=(const Cocycle& o);
  Cocycle& operator*=(const Scalar& s);
  friend Cocycle operator+(Cocycle a, const Cocycle& b) { return a += b; }
  friend Cocycle operator-(Cocycle a, const Cocycle& b) { return a -= b; }
  friend Cocycle operator*(const Scalar& s, Cocycle a) { return a *= s; }
  friend bool operator==(const Cocycle& a, const Cocycle& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  // e.g. "D(1,2,3)+D(1,3,2)", "0" for the zero cochain.
  std::string to_string() const;

 private:
  std::size_t n_;
  Vec<Scalar> a_;
};

struct CochainSpace {
  std::size_t n = 0;
  std::vector<Cocycle> basis;
  std::size_t dim() const { return basis.size(); }
  bool contains(const Cocycle& c) const;
};

// Exhaustive check of the cocycle conditions on basis tuples.
bool is_cocycle(const Lts& T, const Cocycle& theta);

// Linear conditions on the coordinates; one row per basis tuple.
std::vector<Vec<Scalar>> cocycle_system_rows(const Lts& T);
std::vector<Vec<Scalar>> cocycle_system_rows_serial(const Lts& T);

CochainSpace cocycle_space(const Lts& T);
CochainSpace coboundary_space(const Lts& T);
// Coboundary of a linear form f (f_p = f(e_p)).
Cocycle coboundary(const Lts& T, const Vec<Scalar>& f);

struct Cohomology {
  std::size_t dimZ3 = 0;
  std::size_t dimB3 = 0;
  std::size_t dimH3 = 0;
  CochainSpace representatives;
};
Cohomology cohomology(const Lts& T);

// True when the classes of the given cochains are linearly independent modulo B3.
bool classes_independent(const Lts& T, const std::vector<Cocycle>& thetas);
bool is_coboundary(const Lts& T, const Cocycle& theta);

Subspace radical(const Cocycle& theta);

// (phi theta)(x,y,z) = theta(phi x, phi y, phi z) for any linear map phi.
Cocycle pullback(const ScalarMatrix& phi, const Cocycle& theta);
// As pullback, after checking that phi is an automorphism of T.
// Throws SingularMatrix or NotAnAutomorphism.
Cocycle aut_action(const Lts& T, const ScalarMatrix& phi, const Cocycle& theta);
bool is_automorphism(const Lts& T, const ScalarMatrix& phi);

// Blocks C_1..C_n with (C_t)_{ij} = a(i,j,t).
std::vector<ScalarMatrix> matrix_form(const Cocycle& theta);

// The 3x3 matrix with rows (a231,a232,a233), (-a131,-a132,-a133), (a121,a122,a123).
// Throws NotAbelianDim3 or RelationViolated.
ScalarMatrix a_theta(const Lts& T, const Cocycle& theta);

}  // namespace lts
