#include "psi0/verify.hpp"

#include "psi0/gamma.hpp"
#include "psi0/oracle.hpp"
#include "psi0/reference.hpp"
#include "psi0/summation.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace psi0 {
namespace {

// n! / prod(multiplicities!) — the number of distinct rearrangements of a
// sorted exponent vector.
Int orbit_size(const std::vector<long long>& sorted) {
  Int size = 1;
  for (std::size_t i = 2; i <= sorted.size(); ++i) size *= i;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    Int run_factorial = 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) {
      ++j;
      run_factorial *= j - i;
    }
    size /= run_factorial;
    i = j;
  }
  return size;
}

// All non-increasing vectors of the given length with entries in [0, bound].
void for_each_sorted_vector(int length, long long bound,
                            const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<long long> v(length);
  const std::function<void(int, long long)> rec = [&](int pos, long long cap) {
    if (pos == length) {
      fn(v);
      return;
    }
    for (long long value = cap; value >= 0; --value) {
      v[pos] = value;
      rec(pos + 1, value);
    }
  };
  rec(0, bound);
}

std::string describe_vector(const std::vector<long long>& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) out << (i ? "," : "") << x[i];
  out << ')';
  return out.str();
}

}  // namespace

bool VerificationReport::all_passed() const {
  for (const Check& c : checks)
    if (!c.passed) return false;
  return true;
}

std::size_t VerificationReport::passed_count() const {
  std::size_t n = 0;
  for (const Check& c : checks) n += c.passed ? 1 : 0;
  return n;
}

Check compare_sigma_poly(std::string name, const SigmaPoly& expected,
                         const SigmaPoly& actual) {
  Check check;
  check.name = std::move(name);
  {
    std::ostringstream out;
    out << expected.term_count() << " terms, degree "
        << (expected.degree() ? std::to_string(*expected.degree()) : "-inf");
    check.expected = out.str();
  }
  if (expected == actual) {
    check.passed = true;
    return check;
  }
  // Walk the union of monomials in canonical order and name the first spot
  // where the coefficients differ.
  auto ei = expected.terms().begin();
  auto ai = actual.terms().begin();
  SigmaMonomial where;
  Rational want, got;
  while (true) {
    const bool e_end = ei == expected.terms().end();
    const bool a_end = ai == actual.terms().end();
    if (e_end && a_end) break;  // unreachable for unequal polynomials
    if (!e_end && (a_end || SigmaMonomial::canonical_less(ei->first, ai->first))) {
      where = ei->first;
      want = ei->second;
      got = 0;
      break;
    }
    if (e_end || SigmaMonomial::canonical_less(ai->first, ei->first)) {
      where = ai->first;
      want = 0;
      got = ai->second;
      break;
    }
    if (ei->second != ai->second) {
      where = ei->first;
      want = ei->second;
      got = ai->second;
      break;
    }
    ++ei;
    ++ai;
  }
  std::ostringstream out;
  out << "first divergent monomial: " << to_string(where) << " (expected "
      << to_display_string(want) << ", computed " << to_display_string(got) << ")";
  check.detail = out.str();
  check.passed = false;
  return check;
}

VerificationReport verify_reference_tables() {
  VerificationReport report;
  for (int n = 3; n <= reference_gamma_max(); ++n) {
    report.checks.push_back(compare_sigma_poly("gamma(" + std::to_string(n) + ")",
                                               reference_gamma(n), gamma(n)));
  }
  report.checks.push_back(compare_sigma_poly("step(1)", reference_step_of_one(),
                                             summation_step(SigmaPoly::constant(1))));
  report.checks.push_back(compare_sigma_poly("step(s1)", reference_step_of_sigma1(),
                                             summation_step(SigmaPoly::sigma(1))));

  // spot anchors, asserted on their own so the report names them directly
  const struct {
    int n;
    SigmaMonomial monomial;
    Rational want;
  } anchors[] = {
      {8, SigmaMonomial::sigma(1), Rational(137, 60)},
      {8, SigmaMonomial::sigma(5), Rational(19)},
      {7, SigmaMonomial::sigma(3), Rational(-1, 4)},
  };
  for (const auto& anchor : anchors) {
    Check check;
    check.name = "anchor: coefficient of " + to_string(anchor.monomial) + " in gamma(" +
                 std::to_string(anchor.n) + ")";
    check.expected = to_display_string(anchor.want);
    const Rational got = gamma(anchor.n).coeff(anchor.monomial);
    check.passed = got == anchor.want;
    if (!check.passed)
      check.detail = "expected " + to_display_string(anchor.want) + ", computed " +
                     to_display_string(got);
    report.checks.push_back(std::move(check));
  }
  return report;
}

VerificationReport oracle_cross_check(int n_max, int grid_bound) {
  if (n_max < 3) throw std::invalid_argument("oracle_cross_check: n_max must be >= 3");
  if (grid_bound < 0)
    throw std::invalid_argument("oracle_cross_check: grid_bound must be >= 0");
  VerificationReport report;
  GammaCache cache;
  for (int n = 3; n <= n_max; ++n) {
    Check check;
    check.name = "h0 vs value recursion, n = " + std::to_string(n);
    check.expected = "agreement on {0.." + std::to_string(grid_bound) + "}^" +
                     std::to_string(n);
    check.passed = true;
    long long points = 0;
    for_each_sorted_vector(n, grid_bound, [&](const std::vector<long long>& rep) {
      points += orbit_size(rep).convert_to<long long>();
      if (!check.passed) return;  // keep counting, report only the first miss
      const Int expected = oracle_value(n - 3, rep, cache);
      const Int actual = h0(n, std::vector<Int>(rep.begin(), rep.end()));
      if (expected != actual) {
        check.passed = false;
        std::ostringstream out;
        out << "mismatch at x = " << describe_vector(rep) << ": recursion gives "
            << expected << ", polynomial gives " << actual;
        check.detail = out.str();
      }
    });
    report.points_checked += points;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace psi0
