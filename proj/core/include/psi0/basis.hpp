#pragma once

#include "psi0/sigma_poly.hpp"
#include "psi0/xpoly.hpp"

namespace psi0 {

/// The elementary symmetric polynomial sigma_d expanded in var_count
/// variables: the sum of all C(var_count, d) squarefree degree-d monomials,
/// or zero when d > var_count. Requires d >= 1 and var_count >= 1.
XPoly expand_sigma(int d, int var_count);

/// True iff p is invariant under every adjacent variable swap
/// x_i <-> x_{i+1} (the swaps generate the full symmetric group).
bool is_symmetric(const XPoly& p);

/// Substitutes expand_sigma(d, var_count) for each sigma_d. Indices above
/// var_count substitute to zero. The result is symmetric, and of the same
/// degree as f whenever var_count >= degree(f).
XPoly to_x_basis(const SigmaPoly& f, int var_count);

/// Inverse of to_x_basis on its image: writes a symmetric polynomial in the
/// sigma basis by classical lex-leading-term reduction (repeatedly subtract
/// c * sigma_1^{a1-a2} sigma_2^{a2-a3} ... sigma_m^{am}, whose lex-leading
/// monomial is exactly x^a with coefficient 1).
///
/// Requires is_symmetric(g) and degree(g) <= var_count — below that bound the
/// sigma-representation of a stable element is unique; both violations throw
/// std::invalid_argument. Round trip: to_sigma_basis(to_x_basis(f, m)) == f
/// for every f with degree(f) <= m.
SigmaPoly to_sigma_basis(const XPoly& g);

/// Exact evaluation at an integer point: computes sigma_d(x) for every index
/// appearing in f (zero when d > x.size()) and substitutes. x may contain
/// negative entries; callers wanting dimension semantics validate upstream.
Rational evaluate(const SigmaPoly& f, const std::vector<Int>& x);

}  // namespace psi0
