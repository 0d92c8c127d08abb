#pragma once

#include "psi0/sigma_poly.hpp"

#include <string>
#include <vector>

namespace psi0 {

struct Check {
  std::string name;
  std::string expected;  // short description of the expected value
  bool passed = false;
  std::string detail;    // mismatch description; empty on pass
};

struct VerificationReport {
  std::vector<Check> checks;
  long long points_checked = 0;  // grid points covered, counted with orbit multiplicity

  bool all_passed() const;
  std::size_t passed_count() const;
};

/// Structural comparison (exact coefficients, exact monomial set). On
/// mismatch the detail names the first divergent monomial in canonical
/// order together with both coefficients.
Check compare_sigma_poly(std::string name, const SigmaPoly& expected,
                         const SigmaPoly& actual);

/// gamma(3) .. gamma(8) against the embedded reference table, plus the two
/// worked single-step checks. Failures are recorded, never thrown.
VerificationReport verify_reference_tables();

/// Asserts h0(n, x) == oracle_value(n - 3, x) for every n in 3..n_max and
/// every x in {0..grid_bound}^n, iterating sorted orbit representatives and
/// counting points with orbit multiplicity.
VerificationReport oracle_cross_check(int n_max, int grid_bound);

}  // namespace psi0
