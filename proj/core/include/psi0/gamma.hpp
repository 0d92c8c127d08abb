#pragma once

#include "psi0/sigma_poly.hpp"

#include <vector>

namespace psi0 {

/// The symmetric polynomial gamma_n with
/// gamma_n(x_1, ..., x_n) = h^0(M_{0,n}-bar, L_1^{x_1} (x) ... (x) L_n^{x_n}),
/// computed as the (n-3)-fold summation_step iterate of the constant 1.
/// Degree at most n - 3, constant term 1. Results are cached for the
/// lifetime of the process; the cache is never observable in results.
/// Throws std::invalid_argument for n < 3.
SigmaPoly gamma(int n);

/// Dimension of the space of global sections at a non-negative exponent
/// vector of length n: gamma(n) evaluated at x. Exact; always a
/// non-negative integer. Throws std::invalid_argument on a length mismatch
/// or a negative entry.
Int h0(int n, const std::vector<Int>& x);

/// Closed form for a single nonzero exponent: h0 with x = (x, 0, ..., 0)
/// equals C(n - 3 + x, x).
Int h0_single(int n, long long x);

}  // namespace psi0
