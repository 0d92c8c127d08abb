#include "psi0/gamma.hpp"

#include "psi0/basis.hpp"
#include "psi0/summation.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace psi0 {

SigmaPoly gamma(int n) {
  if (n < 3) throw std::invalid_argument("gamma: n must be at least 3");
  static std::mutex mutex;
  static std::deque<SigmaPoly> chain{SigmaPoly::constant(1)};  // chain[k] = gamma(k + 3)
  std::scoped_lock lock(mutex);
  while (static_cast<int>(chain.size()) <= n - 3)
    chain.push_back(summation_step(chain.back()));
  return chain[n - 3];
}

Int h0(int n, const std::vector<Int>& x) {
  if (n < 3) throw std::invalid_argument("h0: n must be at least 3");
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("h0: expected exactly n exponents");
  for (const Int& entry : x)
    if (entry < 0) throw std::invalid_argument("h0: exponents must be non-negative");
  const Rational value = evaluate(gamma(n), x);
  if (!is_integer(value) || value < 0)
    throw std::logic_error("h0: evaluation produced a non-integral or negative value");
  return numerator(value);
}

Int h0_single(int n, long long x) {
  if (n < 3) throw std::invalid_argument("h0_single: n must be at least 3");
  if (x < 0) throw std::invalid_argument("h0_single: exponent must be non-negative");
  return binomial(Int(n - 3) + x, std::min<long long>(x, n - 3));
}

}  // namespace psi0
