#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "lts/polynomial.hpp"

namespace lts {

// Element of Q(i)(t), kept in canonical form after every operation: numerator
// and denominator coprime, denominator monic, zero stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Scalar c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RationalFunction(I c) : RationalFunction(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction t() { return {Polynomial::t()}; }
  // Parses any arithmetic expression in t and i, e.g. "(t^2+3*t)/(t)".
  static RationalFunction parse(std::string_view text);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == Polynomial(1); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Value of a constant function; throws PreconditionViolated otherwise.
  Scalar constant_value() const;

  RationalFunction inv() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inv(); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // "(num)/(den)" with Gaussian-integer coefficients.
  std::string to_string() const;

 private:
  void canonicalize();
  Polynomial num_;
  Polynomial den_;
};

// Value at t = 0 of the reduced form; throws PoleAtZero.
Scalar limit_at_zero(const RationalFunction& f);
// Throws PoleAtPoint when the reduced denominator vanishes at t0.
Scalar evaluate_at(const RationalFunction& f, const Scalar& t0);

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace lts
