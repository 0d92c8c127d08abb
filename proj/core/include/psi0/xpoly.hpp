#pragma once

#include "psi0/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace psi0 {

/// Exponent vector of a monomial in x_0 .. x_{m-1}; entry i is the exponent
/// of x_i. The length always equals the owning polynomial's variable count.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Sparse multivariate polynomial over Q with a fixed variable count.
///
/// Zero coefficients are never stored, so structural equality is semantic
/// equality. The zero polynomial has an empty term map and degree()
/// == nullopt (the "minus infinity" convention, which keeps
/// degree(p*q) = degree(p) + degree(q) total for nonzero factors).
class XPoly {
 public:
  explicit XPoly(int var_count);

  static XPoly constant(int var_count, const Rational& value);
  static XPoly variable(int var_count, int index);  // the monomial x_index
  static XPoly monomial(Exponents exponents, const Rational& coefficient);

  int var_count() const noexcept { return var_count_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::optional<int> degree() const;

  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  Rational coeff(const Exponents& e) const;

  /// Adds c * x^e, pruning the term if the coefficient cancels to zero.
  void add_term(const Exponents& e, const Rational& c);

  XPoly& operator+=(const XPoly& rhs);
  XPoly& operator-=(const XPoly& rhs);
  XPoly& operator*=(const Rational& scalar);
  XPoly operator-() const;

  friend XPoly operator+(XPoly lhs, const XPoly& rhs) { lhs += rhs; return lhs; }
  friend XPoly operator-(XPoly lhs, const XPoly& rhs) { lhs -= rhs; return lhs; }
  friend XPoly operator*(const XPoly& lhs, const XPoly& rhs);
  friend XPoly operator*(const Rational& scalar, XPoly p) { p *= scalar; return p; }

  bool operator==(const XPoly&) const = default;

  /// Exact evaluation at an integer point of length var_count().
  Rational at(const std::vector<Int>& point) const;

 private:
  void require_same_arity(const XPoly& other) const;

  int var_count_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace psi0
