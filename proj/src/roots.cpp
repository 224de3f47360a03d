#include "lts/roots.hpp"

#include <algorithm>

#include "lts/error.hpp"

namespace lts {
namespace {

struct GInt {
  mpz_class re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  mpz_class norm() const { return re * re + im * im; }
  friend GInt operator*(const GInt& a, const GInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GInt operator-(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }
  friend bool operator==(const GInt& a, const GInt& b) { return a.re == b.re && a.im == b.im; }
  Scalar to_scalar() const { return {Rational(re, 1), Rational(im, 1)}; }
};

mpz_class round_div(const mpz_class& n, const mpz_class& d) {
  mpz_class q;
  mpz_class num = 2 * n + d;
  mpz_class den = 2 * d;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// Nearest-integer quotient a / b in Z[i].
GInt round_quotient(const GInt& a, const GInt& b) {
  GInt num = a * GInt{b.re, -b.im};
  mpz_class n = b.norm();
  return {round_div(num.re, n), round_div(num.im, n)};
}

std::optional<GInt> exact_quotient(const GInt& a, const GInt& b) {
  GInt num = a * GInt{b.re, -b.im};
  mpz_class n = b.norm();
  if (!mpz_divisible_p(num.re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(num.im.get_mpz_t(), n.get_mpz_t()))
    return std::nullopt;
  return GInt{num.re / n, num.im / n};
}

GInt ggcd(GInt a, GInt b) {
  while (!b.is_zero()) {
    GInt r = a - round_quotient(a, b) * b;
    a = b;
    b = r;
  }
  return a;
}

constexpr unsigned long kTrialBound = 2000000;

// Rational prime factors of n > 0, or nullopt if trial division is inconclusive.
std::optional<std::vector<mpz_class>> prime_factors(mpz_class n) {
  std::vector<mpz_class> ps;
  for (unsigned long p = 2; p <= kTrialBound && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ps.emplace_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
    if (mpz_class(p) * p > n) break;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    ps.push_back(n);
  }
  return ps;
}

// Gaussian primes (up to units) dividing a rational prime p.
std::vector<GInt> gaussian_primes_over(const mpz_class& p) {
  if (p == 2) return {GInt{1, 1}};
  if (p % 4 == 3) return {GInt{p, 0}};
  mpz_class e = (p - 1) / 4, x;
  for (unsigned long a = 2;; ++a) {
    mpz_class base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if ((x * x + 1) % p == 0) break;
  }
  GInt pi = ggcd(GInt{p, 0}, GInt{x, 1});
  return {pi, GInt{pi.re, -pi.im}};
}

// Divisors of z up to associates.
std::optional<std::vector<GInt>> divisors(const GInt& z) {
  auto ps = prime_factors(z.norm());
  if (!ps) return std::nullopt;
  std::vector<GInt> divs{GInt{1, 0}};
  for (const auto& p : *ps)
    for (const auto& pi : gaussian_primes_over(p)) {
      int e = 0;
      GInt rest = z;
      while (auto q = exact_quotient(rest, pi)) {
        rest = *q;
        ++e;
      }
      std::size_t base = divs.size();
      GInt pw{1, 0};
      for (int k = 1; k <= e; ++k) {
        pw = pw * pi;
        for (std::size_t d = 0; d < base; ++d) divs.push_back(divs[d] * pw);
      }
      if (divs.size() > 20000) return std::nullopt;
    }
  return divs;
}

std::optional<GInt> isqrt_gauss(const GInt& g) {
  if (g.is_zero()) return GInt{0, 0};
  mpz_class n = g.norm();
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  mpz_class m = sqrt(n);
  mpz_class x2 = g.re + m, y2 = m - g.re;
  if (x2 % 2 != 0 || y2 % 2 != 0) return std::nullopt;
  x2 /= 2;
  y2 /= 2;
  if (!mpz_perfect_square_p(x2.get_mpz_t()) || !mpz_perfect_square_p(y2.get_mpz_t())) return std::nullopt;
  GInt r{sqrt(x2), sqrt(y2)};
  if (g.im < 0) r.im = -r.im;
  if (!(r * r == g)) return std::nullopt;
  return r;
}

mpz_class denominator_lcm(const std::vector<Scalar>& cs) {
  mpz_class l = 1;
  for (const auto& c : cs) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().denominator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().denominator().get_mpz_t());
  }
  return l;
}

GInt to_gint(const Scalar& s) { return {s.re().numerator(), s.im().numerator()}; }

}  // namespace

std::optional<Scalar> sqrt_exact(const Scalar& z) {
  // z d^2 is a Gaussian integer when d clears every denominator of z.
  mpz_class d = denominator_lcm({z});
  auto root = isqrt_gauss(to_gint(z * Scalar(Rational(d * d, 1))));
  if (!root) return std::nullopt;
  return root->to_scalar() / Scalar(Rational(d, 1));
}

std::optional<std::vector<Scalar>> roots_in_field(const Polynomial& p) {
  if (p.is_zero()) throw Error(Errc::PreconditionViolated, "roots of the zero polynomial");
  std::vector<Scalar> roots;
  int k = p.low_order();
  if (k > 0) roots.emplace_back(0);
  Polynomial q = p.shift_down(k);
  if (q.degree() <= 0) return roots;
  Scalar scale(Rational(denominator_lcm(q.coeffs()), 1));
  q *= scale;
  auto lo = divisors(to_gint(q.coeff(0)));
  auto hi = divisors(to_gint(q.leading()));
  if (!lo || !hi) return std::nullopt;
  const Scalar units[4] = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
  for (const auto& a : *lo)
    for (const auto& b : *hi) {
      Scalar base = a.to_scalar() / b.to_scalar();
      for (const auto& u : units) {
        Scalar cand = u * base;
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (q.eval(cand).is_zero()) roots.push_back(cand);
      }
    }
  return roots;
}

}  // namespace lts
