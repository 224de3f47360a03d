#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lts/gaussian.hpp"

namespace lts {

// Univariate polynomial in t over Q(i). Coefficients are stored from the
// constant term upwards with no trailing zeros, so the zero polynomial has an
// empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Scalar c);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Polynomial(I c) : Polynomial(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial t() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
  static Polynomial monomial(const Scalar& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Scalar coeff(int k) const;
  const Scalar& leading() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar eval(const Scalar& x) const;
  // Largest k with t^k dividing this polynomial; 0 for the zero polynomial.
  int low_order() const;
  Polynomial shift_down(int k) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Text in t with Scalar coefficients, e.g. "t^2+3*t", "(1+i)*t-1/2".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
// True only when a and b certainly have no common factor; a false result is inconclusive.
bool coprime(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace lts
