#include "psi0/summation.hpp"

#include "psi0/basis.hpp"
#include "psi0/faulhaber.hpp"

#include <map>
#include <stdexcept>

namespace psi0 {

XPoly prefix_sum(const XPoly& f, int var_index) {
  if (var_index < 0 || var_index >= f.var_count())
    throw std::out_of_range("prefix_sum: variable index out of range");
  XPoly out(f.var_count());
  std::map<int, XPoly> summed_power;  // k -> faulhaber(k), per call
  for (const auto& [e, c] : f.terms()) {
    const int k = e[var_index];
    auto it = summed_power.find(k);
    if (it == summed_power.end()) it = summed_power.emplace(k, faulhaber(k)).first;
    Exponents t = e;
    for (const auto& [pe, q] : it->second.terms()) {
      t[var_index] = pe[0];
      out.add_term(t, c * q);
    }
  }
  return out;
}

SigmaPoly summation_step(const SigmaPoly& f, int var_count) {
  if (f.is_zero()) return {};
  const int e = *f.degree();
  if (var_count < e + 1)
    throw std::invalid_argument(
        "summation_step: var_count below the stable range degree(f) + 1");
  const XPoly fx = to_x_basis(f, var_count);
  XPoly g = fx;
  for (int i = 0; i < var_count; ++i) g += prefix_sum(fx, i);
  return to_sigma_basis(g);
}

SigmaPoly summation_step(const SigmaPoly& f) {
  if (f.is_zero()) return {};
  return summation_step(f, *f.degree() + 1);
}

}  // namespace psi0
