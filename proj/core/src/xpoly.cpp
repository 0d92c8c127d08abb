#include "psi0/xpoly.hpp"

#include <numeric>
#include <stdexcept>

namespace psi0 {

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

XPoly::XPoly(int var_count) : var_count_(var_count) {
  if (var_count < 1) throw std::invalid_argument("XPoly: var_count must be at least 1");
}

XPoly XPoly::constant(int var_count, const Rational& value) {
  XPoly p(var_count);
  p.add_term(Exponents(var_count, 0), value);
  return p;
}

XPoly XPoly::variable(int var_count, int index) {
  XPoly p(var_count);
  if (index < 0 || index >= var_count)
    throw std::out_of_range("XPoly::variable: index out of range");
  Exponents e(var_count, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

XPoly XPoly::monomial(Exponents exponents, const Rational& coefficient) {
  XPoly p(static_cast<int>(exponents.size()));
  p.add_term(exponents, coefficient);
  return p;
}

std::optional<int> XPoly::degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) d = std::max(d.value_or(0), total_degree(e));
  return d;
}

Rational XPoly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void XPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != var_count_)
    throw std::invalid_argument("XPoly: exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw std::invalid_argument("XPoly: negative exponent");
  if (c == 0) return;
  const auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void XPoly::require_same_arity(const XPoly& other) const {
  if (var_count_ != other.var_count_)
    throw std::invalid_argument("XPoly: mismatched variable counts");
}

XPoly& XPoly::operator+=(const XPoly& rhs) {
  require_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& rhs) {
  require_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

XPoly& XPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly out(*this);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

XPoly operator*(const XPoly& lhs, const XPoly& rhs) {
  lhs.require_same_arity(rhs);
  XPoly out(lhs.var_count_);
  const bool lhs_smaller = lhs.term_count() <= rhs.term_count();
  const XPoly& outer = lhs_smaller ? lhs : rhs;
  const XPoly& inner = lhs_smaller ? rhs : lhs;
  Exponents e(lhs.var_count_);
  for (const auto& [ea, ca] : outer.terms_) {
    for (const auto& [eb, cb] : inner.terms_) {
      for (int i = 0; i < lhs.var_count_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Rational XPoly::at(const std::vector<Int>& point) const {
  if (static_cast<int>(point.size()) != var_count_)
    throw std::invalid_argument("XPoly::at: point length mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Int value = 1;
    for (int i = 0; i < var_count_; ++i) {
      if (e[i] == 0) continue;
      value *= boost::multiprecision::pow(point[i], static_cast<unsigned>(e[i]));
    }
    acc += c * Rational(value);
  }
  return acc;
}

}  // namespace psi0
