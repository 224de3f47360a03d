#pragma once

#include <string>
#include <vector>

#include "lts/matrix.hpp"

namespace lts {

// Subspace of Q(i)^n with a reduced echelon basis, so equal subspaces have
// identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : n_(ambient), ech_(ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec<Scalar>>& vectors);
  static Subspace whole(std::size_t ambient);
  // Solution set of rows · x = 0.
  static Subspace kernel(std::size_t ambient, const std::vector<Vec<Scalar>>& rows);

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return ech_.rank(); }
  bool is_zero() const { return ech_.rank() == 0; }
  std::vector<Vec<Scalar>> basis() const { return ech_.basis(); }
  bool contains(const Vec<Scalar>& v) const { return ech_.contains(v); }
  bool contains(const Subspace& o) const;
  // Rows spanning the orthogonal complement under the standard pairing.
  std::vector<Vec<Scalar>> equations() const { return ech_.nullspace(); }

  Subspace intersect(const Subspace& o) const;
  Subspace operator+(const Subspace& o) const;
  // Image under a matrix acting on column vectors.
  Subspace image(const ScalarMatrix& g) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.ech_.basis() == b.ech_.basis();
  }

  std::string to_string() const;

 private:
  std::size_t n_;
  RowEchelon<Scalar> ech_;
};

}  // namespace lts
