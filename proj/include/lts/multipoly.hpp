#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "lts/gaussian.hpp"

namespace lts {

// Sparse polynomial over Q(i) in a fixed number of variables x0..x{n-1}.
// Zero coefficients are never stored. A default-constructed zero combines with
// polynomials of any arity.
class MultiPoly {
 public:
  using Exponent = std::vector<std::uint16_t>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  MultiPoly(std::size_t nvars, const Scalar& c);

  static MultiPoly variable(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Exponent, Scalar>& terms() const { return terms_; }
  int total_degree() const;
  Scalar eval(const std::vector<Scalar>& point) const;

  void add_term(const Exponent& e, const Scalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  // A zero created without a variable count takes the count of o.
  void adopt(const MultiPoly& o);
  std::size_t nvars_;
  std::map<Exponent, Scalar> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace lts
