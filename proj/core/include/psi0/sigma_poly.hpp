#pragma once

#include "psi0/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psi0 {

/// Monomial in the graded variables sigma_1, sigma_2, ... (the elementary
/// symmetric functions). sigma_d carries weight d; the weight of a monomial
/// is sum d * e_d. Factors are kept sorted by index with exponents >= 1; the
/// empty factor list is the monomial 1 (weight 0).
class SigmaMonomial {
 public:
  SigmaMonomial() = default;

  static SigmaMonomial one() { return {}; }
  static SigmaMonomial sigma(int index, int exponent = 1);

  bool is_one() const noexcept { return factors_.empty(); }
  int weight() const;
  int max_index() const;            // largest sigma index present, 0 for 1
  int exponent_of(int index) const; // 0 when absent
  const std::vector<std::pair<int, int>>& factors() const noexcept { return factors_; }

  SigmaMonomial& operator*=(const SigmaMonomial& rhs);
  friend SigmaMonomial operator*(SigmaMonomial lhs, const SigmaMonomial& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const SigmaMonomial&) const = default;

  /// Canonical term order: ascending weight, then descending lexicographic on
  /// the exponent sequence (e_1, e_2, ...) — within a weight class the
  /// sigma_1-heavy monomials come first, matching the usual table layout
  /// (sigma_1^3, sigma_1 sigma_2, sigma_3).
  static bool canonical_less(const SigmaMonomial& a, const SigmaMonomial& b);

  struct CanonicalLess {
    bool operator()(const SigmaMonomial& a, const SigmaMonomial& b) const {
      return canonical_less(a, b);
    }
  };

 private:
  std::vector<std::pair<int, int>> factors_;
};

/// "1", "s3", "s1^2 s2" — ascii form, factors in ascending index order.
/// The prefix replaces "s" (pass "σ" for display output).
std::string to_string(const SigmaMonomial& m, std::string_view prefix = "s");

/// Parses the to_string form back. Throws std::invalid_argument.
SigmaMonomial parse_sigma_monomial(std::string_view text);

/// Sparse polynomial in sigma_1, sigma_2, ... over Q — an element of the
/// stable ring of symmetric functions. Terms iterate in canonical order and
/// zero coefficients are never stored.
class SigmaPoly {
 public:
  using TermMap = std::map<SigmaMonomial, Rational, SigmaMonomial::CanonicalLess>;

  SigmaPoly() = default;  // zero

  static SigmaPoly constant(const Rational& value);
  static SigmaPoly sigma(int index);

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Highest monomial weight; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  Rational constant_term() const { return coeff(SigmaMonomial::one()); }

  const TermMap& terms() const noexcept { return terms_; }
  Rational coeff(const SigmaMonomial& m) const;
  void add_term(const SigmaMonomial& m, const Rational& c);

  SigmaPoly& operator+=(const SigmaPoly& rhs);
  SigmaPoly& operator-=(const SigmaPoly& rhs);
  SigmaPoly& operator*=(const Rational& scalar);
  SigmaPoly operator-() const;

  friend SigmaPoly operator+(SigmaPoly lhs, const SigmaPoly& rhs) { lhs += rhs; return lhs; }
  friend SigmaPoly operator-(SigmaPoly lhs, const SigmaPoly& rhs) { lhs -= rhs; return lhs; }
  friend SigmaPoly operator*(const SigmaPoly& lhs, const SigmaPoly& rhs);
  friend SigmaPoly operator*(const Rational& scalar, SigmaPoly p) { p *= scalar; return p; }

  bool operator==(const SigmaPoly&) const = default;

 private:
  TermMap terms_;
};

}  // namespace psi0
