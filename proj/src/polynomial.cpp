#include "lts/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "lts/error.hpp"

namespace lts {

Polynomial::Polynomial(Scalar c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Scalar& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

Scalar Polynomial::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return c_.empty() ? 0 : k;
}

Polynomial Polynomial::shift_down(int k) const {
  if (k <= 0) return *this;
  if (k >= static_cast<int>(c_.size())) return {};
  return Polynomial(std::vector<Scalar>(c_.begin() + k, c_.end()));
}

Polynomial Polynomial::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  Polynomial r = *this;
  r *= c_.back().inv();
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

namespace {

// Coefficients scaled by a common denominator into Gaussian integers.
struct IntegerForm {
  std::vector<mpz_class> re, im;
  mpz_class den{1};
  bool real = true;
};

IntegerForm integer_form(const std::vector<Scalar>& c) {
  IntegerForm f;
  for (const auto& x : c) {
    mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), x.re().raw().get_den_mpz_t());
    if (!x.is_real()) {
      f.real = false;
      mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), x.im().raw().get_den_mpz_t());
    }
  }
  f.re.resize(c.size());
  f.im.resize(c.size());
  mpz_class q;
  for (std::size_t k = 0; k < c.size(); ++k) {
    mpz_divexact(q.get_mpz_t(), f.den.get_mpz_t(), c[k].re().raw().get_den_mpz_t());
    f.re[k] = c[k].re().raw().get_num() * q;
    if (!c[k].is_real()) {
      mpz_divexact(q.get_mpz_t(), f.den.get_mpz_t(), c[k].im().raw().get_den_mpz_t());
      f.im[k] = c[k].im().raw().get_num() * q;
    }
  }
  return f;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntegerForm fa = integer_form(a.c_), fb = integer_form(b.c_);
  std::size_t n = a.c_.size() + b.c_.size() - 1;
  std::vector<mpz_class> re(n), im(n);
  bool real = fa.real && fb.real;
  for (std::size_t i = 0; i < fa.re.size(); ++i) {
    for (std::size_t j = 0; j < fb.re.size(); ++j) {
      mpz_addmul(re[i + j].get_mpz_t(), fa.re[i].get_mpz_t(), fb.re[j].get_mpz_t());
      if (real) continue;
      mpz_submul(re[i + j].get_mpz_t(), fa.im[i].get_mpz_t(), fb.im[j].get_mpz_t());
      mpz_addmul(im[i + j].get_mpz_t(), fa.re[i].get_mpz_t(), fb.im[j].get_mpz_t());
      mpz_addmul(im[i + j].get_mpz_t(), fa.im[i].get_mpz_t(), fb.re[j].get_mpz_t());
    }
  }
  mpz_class den = fa.den * fb.den;
  std::vector<Scalar> r(n);
  for (std::size_t k = 0; k < n; ++k)
    r[k] = real ? Scalar(Rational(re[k], den)) : Scalar(Rational(re[k], den), Rational(im[k], den));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  Scalar lead_inv = b.leading().inv();
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Scalar q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
    if (q.is_zero()) continue;
    quo[static_cast<std::size_t>(k)] = q;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

namespace {

// Arithmetic modulo p = 10^9 + 9, a prime with p = 1 mod 4, so i maps to a
// square root of -1.
constexpr std::uint64_t kP = 1000000009ULL;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kP);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mulmod(b, b))
    if (e & 1) r = mulmod(r, b);
  return r;
}

std::uint64_t sqrt_minus_one() {
  static const std::uint64_t root = [] {
    for (std::uint64_t g = 2;; ++g) {
      std::uint64_t x = powmod(g, (kP - 1) / 4);
      if (mulmod(x, x) == kP - 1) return x;
    }
  }();
  return root;
}

std::optional<std::uint64_t> reduce(const Rational& q) {
  std::uint64_t den = mpz_fdiv_ui(q.raw().get_den_mpz_t(), kP);
  if (den == 0) return std::nullopt;
  std::uint64_t num = mpz_fdiv_ui(q.raw().get_num_mpz_t(), kP);
  return mulmod(num, powmod(den, kP - 2));
}

std::optional<std::vector<std::uint64_t>> reduce(const Polynomial& a) {
  std::vector<std::uint64_t> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    auto re = reduce(c.re()), im = reduce(c.im());
    if (!re || !im) return std::nullopt;
    out.push_back((*re + mulmod(*im, sqrt_minus_one())) % kP);
  }
  if (out.empty() || out.back() == 0) return std::nullopt;
  return out;
}

std::size_t modular_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t f = mulmod(a.back(), powmod(b.back(), kP - 2));
      std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + kP - mulmod(f, b[j])) % kP;
      trim(a);
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

}  // namespace

// A good prime never lowers the gcd degree, so a constant gcd modulo p
// settles coprimality without the rational remainder sequence.
bool coprime(const Polynomial& a, const Polynomial& b) {
  auto ra = reduce(a), rb = reduce(b);
  return ra && rb && modular_gcd_degree(std::move(*ra), std::move(*rb)) == 0;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  if (!a.is_zero() && !b.is_zero() && coprime(a, b)) return Polynomial(1);
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    std::string term;
    if (k == 0) {
      term = c.to_string();
    } else if (c.is_one()) {
      term = mono;
    } else if (c == Scalar(-1)) {
      term = "-" + mono;
    } else if (c.is_real() || c.re().is_zero()) {
      term = c.to_string() + "*" + mono;
    } else {
      term = "(" + c.to_string() + ")*" + mono;
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace lts
