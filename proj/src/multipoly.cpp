#include "lts/multipoly.hpp"

#include <algorithm>

#include "lts/error.hpp"

namespace lts {

MultiPoly::MultiPoly(std::size_t nvars, const Scalar& c) : nvars_(nvars) {
  if (!c.is_zero()) terms_.emplace(Exponent(nvars, 0), c);
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t k) {
  if (k >= nvars) throw Error(Errc::DimensionMismatch, "variable index out of range");
  MultiPoly p(nvars);
  Exponent e(nvars, 0);
  e[k] = 1;
  p.terms_.emplace(std::move(e), Scalar(1));
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw Error(Errc::DimensionMismatch, "evaluation point has wrong length");
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    Scalar m = c;
    for (std::size_t k = 0; k < nvars_; ++k)
      for (int j = 0; j < e[k]; ++j) m *= point[k];
    acc += m;
  }
  return acc;
}

void MultiPoly::adopt(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
}

void MultiPoly::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  adopt(o);
  if (o.nvars_ != nvars_ && !o.is_zero()) throw Error(Errc::DimensionMismatch, "variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  adopt(o);
  if (o.nvars_ != nvars_ && !o.is_zero()) throw Error(Errc::DimensionMismatch, "variable counts differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly(std::max(a.nvars_, b.nvars_));
  if (a.nvars_ != b.nvars_) throw Error(Errc::DimensionMismatch, "variable counts differ");
  MultiPoly r(a.nvars_);
  MultiPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(ea[k] + eb[k]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (it->first[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(k);
      if (it->first[k] > 1) mono += "^" + std::to_string(it->first[k]);
    }
    const Scalar& c = it->second;
    std::string term;
    if (mono.empty()) term = c.to_string();
    else if (c.is_one()) term = mono;
    else if (c == Scalar(-1)) term = "-" + mono;
    else if (c.is_real()) term = c.to_string() + "*" + mono;
    else term = "(" + c.to_string() + ")*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace lts
