#pragma once

#include "psi0/xpoly.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace psi0 {

/// Integer coefficient table for rewriting powers in the binomial basis:
/// row k holds c(k, i) = i! * S(k, i) for i = 0..k, where S is the Stirling
/// number of the second kind, so that j^k = sum_i c(k, i) * C(j, i).
///
/// Rows extend lazily under a lock; a completed row is immutable, so the
/// reference returned by row() stays valid and extension is idempotent under
/// concurrent use.
class StirlingTable {
 public:
  StirlingTable();

  const std::vector<Int>& row(int k);

  static StirlingTable& shared();

 private:
  std::deque<std::vector<Int>> rows_;
  std::mutex mutex_;
};

/// The unique degree-(k+1) polynomial P (univariate, var_count 1) with
/// P(X) = sum_{j=0}^{X-1} j^k for every integer X >= 0. The empty-sum
/// convention gives P(0) = 0, and P(1) = 0^k. Computed via the
/// falling-factorial identity sum_{j=0}^{X-1} C(j, i) = C(X, i+1), which
/// keeps every intermediate table entry an integer.
XPoly faulhaber(int k);

}  // namespace psi0
