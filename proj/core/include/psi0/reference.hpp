#pragma once

#include "psi0/sigma_poly.hpp"

namespace psi0 {

// Reference sigma-basis expansions, transcribed once into
// core/src/gamma_reference.inc and parsed at first use.

/// gamma(n) for 3 <= n <= reference_gamma_max(). Throws std::out_of_range
/// outside that window.
const SigmaPoly& reference_gamma(int n);

int reference_gamma_max();  // currently 8

/// Worked single-step results: summation_step(1) = 1 + s1 and
/// summation_step(s1) = 1/2 s1 + 1/2 s1^2 + s2.
const SigmaPoly& reference_step_of_one();
const SigmaPoly& reference_step_of_sigma1();

}  // namespace psi0
