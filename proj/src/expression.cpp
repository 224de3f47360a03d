#include "lts/expression.hpp"

#include <cctype>
#include <string>

#include "lts/error.hpp"

namespace lts {
namespace {

class Parser {
 public:
  Parser(std::string_view s, bool allow_t) : s_(s), allow_t_(allow_t) {}

  RationalFunction run() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    RationalFunction v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::Parse, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!eat('^')) return base;
    RationalFunction e = unary();
    if (!e.is_constant()) fail("exponent must be constant");
    Scalar ev = e.constant_value();
    if (!ev.is_real() || !ev.re().is_integer()) fail("exponent must be an integer");
    mpz_class ez = ev.re().numerator();
    if (abs(ez) > 4096) fail("exponent too large");
    long k = ez.get_si();
    if (k < 0) {
      if (base.is_zero()) fail("zero to a negative power");
      base = base.inv();
      k = -k;
    }
    RationalFunction r(1);
    for (long j = 0; j < k; ++j) r *= base;
    return r;
  }

  RationalFunction atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return RationalFunction(Scalar(Rational(z, mpz_class(1))));
    }
    if (c == 'i') {
      ++pos_;
      return RationalFunction(Scalar::i());
    }
    if (c == 't') {
      if (!allow_t_) fail("parameter t not allowed here");
      ++pos_;
      return RationalFunction::t();
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  bool allow_t_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text) { return Parser(text, true).run(); }

Scalar parse_scalar(std::string_view text) { return Parser(text, false).run().constant_value(); }

}  // namespace lts
