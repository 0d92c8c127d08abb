// Acceptance suite: one criterion per entry, one PASS/FAIL line each, all
// comparisons exact (zero tolerance). Budgets are wall-clock upper bounds;
// a criterion fails on any value mismatch or budget overrun.

#include "psi0/basis.hpp"
#include "psi0/faulhaber.hpp"
#include "psi0/gamma.hpp"
#include "psi0/oracle.hpp"
#include "psi0/reference.hpp"
#include "psi0/summation.hpp"
#include "psi0/verify.hpp"

#include <test_support.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using psi0::Int;
using psi0::Rational;
using psi0::SigmaMonomial;
using psi0::SigmaPoly;

// empty result = pass; otherwise the first failure, described
using Failure = std::optional<std::string>;

Failure table_reproduction() {
  for (int n = 3; n <= 8; ++n) {
    const psi0::Check check =
        psi0::compare_sigma_poly("gamma(" + std::to_string(n) + ")",
                                 psi0::reference_gamma(n), psi0::gamma(n));
    if (!check.passed) return check.name + ": " + check.detail;
  }
  // representative anchors, asserted directly
  if (psi0::gamma(8).coeff(SigmaMonomial::sigma(1)) != Rational(137, 60))
    return "gamma(8): coefficient of s1 is not 137/60";
  if (psi0::gamma(8).coeff(SigmaMonomial::sigma(5)) != 19)
    return "gamma(8): coefficient of s5 is not 19";
  if (psi0::gamma(7).coeff(SigmaMonomial::sigma(3)) != Rational(-1, 4))
    return "gamma(7): coefficient of s3 is not -1/4";
  return std::nullopt;
}

Failure worked_examples() {
  const SigmaPoly step_one = psi0::summation_step(SigmaPoly::constant(1));
  if (step_one != psi0::reference_step_of_one())
    return "step(1) != 1 + s1";
  const SigmaPoly step_s1 = psi0::summation_step(SigmaPoly::sigma(1));
  if (step_s1 != psi0::reference_step_of_sigma1())
    return "step(s1) != 1/2 s1 + 1/2 s1^2 + s2";
  return std::nullopt;
}

Failure oracle_equivalence() {
  const psi0::VerificationReport report = psi0::oracle_cross_check(8, 2);
  for (const psi0::Check& check : report.checks)
    if (!check.passed) return check.name + ": " + check.detail;
  long long expected_points = 0;  // sum of 3^n for n = 3..8
  for (int n = 3; n <= 8; ++n) {
    long long g = 1;
    for (int i = 0; i < n; ++i) g *= 3;
    expected_points += g;
  }
  if (report.points_checked != expected_points) {
    std::ostringstream out;
    out << "orbit accounting covered " << report.points_checked
        << " points, expected " << expected_points;
    return out.str();
  }
  return std::nullopt;
}

Failure binomial_closed_form() {
  for (int n = 3; n <= 12; ++n) {
    for (long long x = 0; x <= 15; ++x) {
      std::vector<Int> point(n, 0);
      point[0] = x;
      const Int via_polynomial = psi0::h0(n, point);
      const Int closed_form = psi0::binomial(Int(n - 3) + x, x);
      if (via_polynomial != closed_form || psi0::h0_single(n, x) != closed_form) {
        std::ostringstream out;
        out << "n=" << n << ", x=" << x << ": polynomial gives " << via_polynomial
            << ", C(n-3+x, x) = " << closed_form;
        return out.str();
      }
    }
  }
  return std::nullopt;
}

Failure recursion_consistency() {
  // h0(n+1, (x, 0)) = h0(n, x) + sum_i sum_{j < x_i} h0(n, x | x_i -> j)
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> n_dist(3, 7);
  std::uniform_int_distribution<int> entry(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = n_dist(rng);
    std::vector<Int> x(n);
    for (auto& v : x) v = entry(rng);
    std::vector<Int> extended = x;
    extended.push_back(0);
    Int rhs = psi0::h0(n, x);
    std::vector<Int> inner = x;
    for (int i = 0; i < n; ++i) {
      for (Int j = 0; j < x[i]; ++j) {
        inner[i] = j;
        rhs += psi0::h0(n, inner);
      }
      inner[i] = x[i];
    }
    if (psi0::h0(n + 1, extended) != rhs) {
      std::ostringstream out;
      out << "trial " << trial << " (n=" << n << ") violates the relation";
      return out.str();
    }
  }
  return std::nullopt;
}

Failure property_suite() {
  std::mt19937_64 rng(0xacce97ed);

  // stable-range independence and linearity of the summation step
  std::uniform_int_distribution<int> scalar(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const SigmaPoly f = test_support::random_sigma_poly(rng, 3, 4);
    const SigmaPoly g = test_support::random_sigma_poly(rng, 3, 4);
    if (!f.is_zero()) {
      const int e = *f.degree();
      if (psi0::summation_step(f, e + 1) != psi0::summation_step(f, e + 2))
        return "summation_step depends on the variable count inside the stable range";
    }
    if (psi0::summation_step(f + g) !=
        psi0::summation_step(f) + psi0::summation_step(g))
      return "summation_step is not additive";
    const Rational c(scalar(rng), 2);
    if (psi0::summation_step(c * f) != c * psi0::summation_step(f))
      return "summation_step does not commute with scalars";
  }

  // sigma / x round trip
  for (int trial = 0; trial < 25; ++trial) {
    const SigmaPoly f = test_support::random_sigma_poly(rng, 4, 5);
    const int e = f.degree().value_or(0);
    for (int m = std::max(e, 1); m <= e + 1; ++m)
      if (psi0::to_sigma_basis(psi0::to_x_basis(f, m)) != f)
        return "sigma -> x -> sigma round trip lost information";
  }

  // Faulhaber telescoping up to k = 12
  for (int k = 0; k <= 12; ++k) {
    const psi0::XPoly p = psi0::faulhaber(k);
    for (long long X = 0; X <= k + 2; ++X) {
      const Rational lhs = p.at({X + 1}) - p.at({X});
      const Rational rhs(boost::multiprecision::pow(Int(X), static_cast<unsigned>(k)));
      if (lhs != rhs) return "faulhaber telescoping fails at k=" + std::to_string(k);
    }
  }

  // value symmetry under random permutations
  std::uniform_int_distribution<int> entry(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6;
    std::vector<Int> x(n);
    for (auto& v : x) v = entry(rng);
    std::vector<Int> permuted = x;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    if (psi0::h0(n, x) != psi0::h0(n, permuted))
      return "h0 is not invariant under a permutation of the exponents";
  }

  // integrality and non-negativity: h0 throws if evaluation is fractional
  // or negative, so completing the loop is the assertion
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 6;
    std::vector<Int> x(n);
    for (auto& v : x) v = entry(rng);
    try {
      if (psi0::h0(n, x) < 0) return "h0 returned a negative value";
    } catch (const std::exception& e) {
      return std::string("h0 rejected a valid point: ") + e.what();
    }
  }

  // constant term of gamma(n) is exactly 1
  for (int n = 3; n <= 10; ++n)
    if (psi0::gamma(n).constant_term() != 1)
      return "gamma(" + std::to_string(n) + ") has constant term != 1";

  // mixed-exponent spot checks at n = 12 against the value recursion; these
  // exercise the high-weight mixed monomials that the binomial axis cannot
  // (every sigma_d with d >= 2 vanishes at single-exponent points)
  psi0::GammaCache cache;
  const std::vector<std::vector<long long>> points{
      {2, 2, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0},
      {2, 1, 0, 2, 1, 0, 2, 1, 0, 2, 1, 0},
  };
  for (const auto& x : points) {
    if (psi0::h0(12, std::vector<Int>(x.begin(), x.end())) !=
        psi0::oracle_value(9, x, cache))
      return "h0(12, x) disagrees with the value recursion at a mixed point";
  }

  return std::nullopt;
}

struct Criterion {
  std::string name;
  double budget_seconds;  // 0 = no stated budget
  std::function<Failure()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"table reproduction: gamma(3..8) matches the reference expansion exactly", 5.0,
       table_reproduction},
      {"worked examples: step(1) and step(s1) reproduce the known expansions", 1.0,
       worked_examples},
      {"oracle equivalence: h0 == value recursion on {0,1,2}^n for n = 3..8", 60.0,
       oracle_equivalence},
      {"binomial closed form: h0(n, (x,0,...)) == C(n-3+x, x), n <= 12, x <= 15", 10.0,
       binomial_closed_form},
      {"recursion consistency: extra zero-exponent marking, 200 random points", 0.0,
       recursion_consistency},
      {"property suite: stable range, linearity, round trip, telescoping, symmetry, "
       "integrality, constant term", 30.0,
       property_suite},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& criterion = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = criterion.run();
    } catch (const std::exception& e) {
      failure = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!failure && criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds) {
      std::ostringstream out;
      out << "exceeded the " << criterion.budget_seconds << "s budget";
      failure = out.str();
    }
    std::cout << (failure ? "FAIL" : "PASS") << "  " << i + 1 << ". " << criterion.name
              << "  [" << std::fixed << std::setprecision(2) << elapsed << "s";
    if (criterion.budget_seconds > 0)
      std::cout << " / " << std::setprecision(0) << criterion.budget_seconds << "s";
    std::cout << "]\n";
    if (failure) {
      std::cout << "      " << *failure << "\n";
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
