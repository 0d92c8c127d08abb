#include "psi0/rational.hpp"

#include <stdexcept>

namespace psi0 {

Int binomial(const Int& n, long long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || n < k) return 0;
  if (Int(k) * 2 > n) k = (n - k).convert_to<long long>();
  Int result = 1;
  for (long long t = 1; t <= k; ++t) {
    result *= n - k + t;
    result /= t;  // exact: C(n-k+t, t) is an integer at every step
  }
  return result;
}

Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("parse_rational: malformed rational '" +
                                 std::string(text) + "'");
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  const std::string_view trimmed = trim(text);
  if (trimmed.empty()) throw bad();

  const auto slash = trimmed.find('/');
  const std::string_view num_part = trim(trimmed.substr(0, slash));
  const std::string_view den_part =
      slash == std::string_view::npos ? std::string_view("1")
                                      : trim(trimmed.substr(slash + 1));
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::string_view digits = s;
    if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
    if (digits.empty()) throw bad();
    for (char c : digits)
      if (c < '0' || c > '9') throw bad();
    return Int(std::string(s));
  };
  Int num = parse_int(num_part);
  Int den = parse_int(den_part);
  if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
  if (den < 0) {  // the two-argument Rational constructor rejects negative denominators
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string to_display_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace psi0
