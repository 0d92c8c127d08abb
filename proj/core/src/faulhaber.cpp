#include "psi0/faulhaber.hpp"

#include <stdexcept>

namespace psi0 {

StirlingTable::StirlingTable() { rows_.push_back({Int(1)}); }

const std::vector<Int>& StirlingTable::row(int k) {
  if (k < 0) throw std::invalid_argument("StirlingTable: k must be non-negative");
  std::scoped_lock lock(mutex_);
  while (static_cast<int>(rows_.size()) <= k) {
    const std::vector<Int>& prev = rows_.back();
    const int n = static_cast<int>(rows_.size());
    std::vector<Int> next(n + 1);
    // c(k, i) = i * (c(k-1, i) + c(k-1, i-1)), from the Stirling recurrence
    // S(k, i) = i*S(k-1, i) + S(k-1, i-1) scaled by i!.
    next[0] = 0;
    for (int i = 1; i <= n; ++i) {
      const Int same = i < n ? prev[i] : Int(0);
      next[i] = Int(i) * (same + prev[i - 1]);
    }
    rows_.push_back(std::move(next));
  }
  // Completed rows are immutable and deque growth leaves them in place, so
  // the reference stays valid after the lock is released.
  return rows_[k];
}

StirlingTable& StirlingTable::shared() {
  static StirlingTable table;
  return table;
}

XPoly faulhaber(int k) {
  if (k < 0) throw std::invalid_argument("faulhaber: k must be non-negative");
  const std::vector<Int>& row = StirlingTable::shared().row(k);

  // P(X) = sum_i c(k, i) * C(X, i+1) with C(X, i+1) = X(X-1)...(X-i)/(i+1)!.
  std::vector<Rational> coeffs(k + 2, Rational(0));
  std::vector<Int> falling{0, 1};  // X
  Int factorial = 1;               // (i+1)!
  for (int i = 0; i <= k; ++i) {
    factorial *= i + 1;
    if (row[i] != 0) {
      for (int t = 1; t <= i + 1; ++t)
        coeffs[t] += Rational(row[i] * falling[t], factorial);
    }
    if (i < k) {
      // falling *= (X - (i+1))
      std::vector<Int> next(falling.size() + 1, 0);
      for (std::size_t t = 0; t < falling.size(); ++t) {
        next[t + 1] += falling[t];
        next[t] -= Int(i + 1) * falling[t];
      }
      falling = std::move(next);
    }
  }

  XPoly p(1);
  for (int t = 0; t <= k + 1; ++t) p.add_term({t}, coeffs[t]);
  return p;
}

}  // namespace psi0
