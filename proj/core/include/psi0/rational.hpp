#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace psi0 {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational coefficient. Always fully reduced with a positive
/// denominator; zero is canonically 0/1. Division by zero throws
/// std::overflow_error.
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// C(n, k) for n >= 0, exact. Returns 0 when k < 0 or k > n.
Int binomial(const Int& n, long long k);

/// Parses "num" or "num/den" (den nonzero); the result is normalized.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "3/2", "-21/2", "19" — the denominator is omitted when it is 1.
std::string to_display_string(const Rational& r);

/// Always "num/den", e.g. "19/1". Stable machine form.
std::string to_fraction_string(const Rational& r);

}  // namespace psi0
