#pragma once

#include "psi0/sigma_poly.hpp"
#include "psi0/xpoly.hpp"

namespace psi0 {

/// The polynomial equal, at every non-negative integer point, to
/// sum_{j=0}^{x_i - 1} f(..., j, ...) over the slot var_index: f is
/// collected by powers of x_i and x_i^k is replaced by faulhaber(k)
/// evaluated at x_i. Total degree grows by at most one.
XPoly prefix_sum(const XPoly& f, int var_index);

/// One application of the linear summation operator on the stable ring:
/// with e = degree(f), expand f in var_count >= e + 1 variables, form
///
///   g = f + sum_i sum_{j=0}^{x_i - 1} f(x_1, ..., j, ..., x_m)
///
/// and convert g back to the sigma basis. The result is independent of
/// var_count inside that stable range, has degree at most e + 1, and
/// preserves the constant term (at x = 0 every inner sum is empty).
SigmaPoly summation_step(const SigmaPoly& f, int var_count);

/// Same, with the minimal stable variable count degree(f) + 1 (one variable
/// for constants; the zero polynomial maps to zero).
SigmaPoly summation_step(const SigmaPoly& f);

}  // namespace psi0
