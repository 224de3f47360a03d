#include "lts/rational.hpp"

#include <cctype>

#include "lts/error.hpp"

namespace lts {

std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PoleAtZero: return "PoleAtZero";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::Parse: return "ParseError";
    case Errc::InconsistentTable: return "InconsistentTable";
    case Errc::AxiomViolation: return "AxiomViolation";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NotALieAlgebra: return "NotALieAlgebra";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::NotAbelianDim3: return "NotAbelianDim3";
    case Errc::RelationViolated: return "RelationViolated";
    case Errc::NotClosed: return "NotClosed";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::UnknownName: return "UnknownName";
    case Errc::MissingParameter: return "MissingParameter";
    case Errc::SingularParameter: return "SingularParameter";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::DimensionUnsupported: return "DimensionUnsupported";
    case Errc::NoMatch: return "NoMatch";
    case Errc::SingularBasis: return "SingularBasis";
    case Errc::InconsistentGraph: return "InconsistentGraph";
    case Errc::FieldRestriction: return "FieldRestriction";
  }
  return "Unknown";
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw Error(Errc::Parse, "not a rational: '" + s + "'");
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  return Rational(mpz_class(num), mpz_class(den));
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace lts
