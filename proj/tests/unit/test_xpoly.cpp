#include "psi0/xpoly.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace psi0;

namespace {
XPoly x(int var_count, int index) { return XPoly::variable(var_count, index); }
}  // namespace

TEST_CASE("addition cancels terms away") {
  const XPoly sum = x(2, 0) + x(2, 1) + (-x(2, 1));
  CHECK(sum == x(2, 0));
  CHECK(sum.term_count() == 1);
}

TEST_CASE("multiplication") {
  CHECK(x(2, 0) * x(2, 1) == XPoly::monomial({1, 1}, 1));

  const XPoly one = XPoly::constant(1, 1);
  const XPoly diff_of_squares = (x(1, 0) + one) * (x(1, 0) - one);
  XPoly expected = XPoly::monomial({2}, 1);
  expected.add_term({0}, -1);
  CHECK(diff_of_squares == expected);
}

TEST_CASE("degree with the minus-infinity sentinel") {
  CHECK_FALSE(XPoly(3).degree().has_value());
  CHECK(XPoly::constant(3, 5).degree() == 0);
  CHECK(XPoly::monomial({2, 1, 0}, 1).degree() == 3);

  // degree(p*q) = degree(p) + degree(q) for nonzero factors
  const XPoly p = x(2, 0) * x(2, 0) + x(2, 1);
  const XPoly q = x(2, 1) * x(2, 1) * x(2, 0) + XPoly::constant(2, 3);
  CHECK(*(p * q).degree() == *p.degree() + *q.degree());

  // multiplying by zero gives zero, not a degree accident
  CHECK((p * XPoly(2)).is_zero());
}

TEST_CASE("mismatched variable counts throw") {
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(x(2, 0) * x(3, 0), std::invalid_argument);
}

TEST_CASE("term bookkeeping") {
  XPoly p(2);
  p.add_term({1, 0}, Rational(1, 2));
  p.add_term({1, 0}, Rational(1, 2));
  CHECK(p.coeff({1, 0}) == 1);
  p.add_term({1, 0}, -1);
  CHECK(p.is_zero());  // cancellation never leaves a stored zero

  CHECK_THROWS_AS(p.add_term({1, 2, 3}, 1), std::invalid_argument);
  CHECK_THROWS_AS(p.add_term({-1, 0}, 1), std::invalid_argument);
}

TEST_CASE("no stored zero coefficients after arithmetic") {
  const XPoly p = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));  // x0^2 - x1^2
  for (const auto& [e, c] : p.terms()) CHECK(c != 0);
  CHECK(p.term_count() == 2);
}

TEST_CASE("exact evaluation") {
  const XPoly p = x(2, 0) * x(2, 0) + Rational(1, 2) * x(2, 1);  // x0^2 + x1/2
  CHECK(p.at({3, 4}) == 11);
  CHECK(p.at({0, 1}) == Rational(1, 2));
  CHECK(p.at({-2, 2}) == 5);
  CHECK_THROWS_AS(p.at({1}), std::invalid_argument);
}
