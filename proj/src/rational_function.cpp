#include "lts/rational_function.hpp"

#include "lts/error.hpp"
#include "lts/expression.hpp"

namespace lts {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    if (!den_.leading().is_one()) num_ *= den_.leading().inv();
    den_ = Polynomial(1);
    return;
  }
  // Common powers of t are cheap to strip before the general gcd.
  int k = std::min(num_.low_order(), den_.low_order());
  if (k > 0) {
    num_ = num_.shift_down(k);
    den_ = den_.shift_down(k);
  }
  if (!num_.is_constant() && !den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  Scalar lead = den_.leading();
  if (!lead.is_one()) {
    Scalar li = lead.inv();
    num_ *= li;
    den_ *= li;
  }
}

RationalFunction RationalFunction::parse(std::string_view text) { return parse_rational_function(text); }

Scalar RationalFunction::constant_value() const {
  if (!is_constant()) throw Error(Errc::PreconditionViolated, "rational function is not constant: " + to_string());
  return num_.coeff(0);
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero rational function");
  return {den_, num_};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) canonicalize();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  canonicalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

mpz_class coeff_lcm(const Polynomial& p, mpz_class acc) {
  for (const auto& c : p.coeffs()) {
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.re().denominator().get_mpz_t());
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.im().denominator().get_mpz_t());
  }
  return acc;
}

}  // namespace

std::string RationalFunction::to_string() const {
  mpz_class l = coeff_lcm(den_, coeff_lcm(num_, mpz_class(1)));
  Scalar scale(Rational(l, mpz_class(1)));
  Polynomial n = num_;
  Polynomial d = den_;
  n *= scale;
  d *= scale;
  return "(" + n.to_string() + ")/(" + d.to_string() + ")";
}

Scalar limit_at_zero(const RationalFunction& f) {
  Scalar d0 = f.den().coeff(0);
  if (d0.is_zero()) throw Error(Errc::PoleAtZero, "pole at t = 0 in " + f.to_string());
  return f.num().coeff(0) / d0;
}

Scalar evaluate_at(const RationalFunction& f, const Scalar& t0) {
  Scalar d = f.den().eval(t0);
  if (d.is_zero()) throw Error(Errc::PoleAtPoint, "pole at t = " + t0.to_string() + " in " + f.to_string());
  return f.num().eval(t0) / d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace lts
