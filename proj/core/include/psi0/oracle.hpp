#pragma once

#include "psi0/rational.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace psi0 {

/// Memo table for the value-level recursion, keyed by (step count, exponent
/// vector sorted non-increasing). The sorted key is a valid canonical orbit
/// representative because every iterate is a symmetric function of the
/// entries. Concurrent reads and idempotent concurrent inserts are safe;
/// values are deterministic, so racing writers agree.
class GammaCache {
 public:
  using Key = std::pair<int, std::vector<long long>>;

  /// Null when absent. The pointee is stable: entries are never erased or
  /// overwritten.
  const Int* find(int steps, const std::vector<long long>& sorted_key) const;

  /// No-op when the key is already present.
  void store(int steps, std::vector<long long> sorted_key, Int value);

  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<Key, Int> memo_;
};

/// Independent brute-force recursion for the values of the k-fold summation
/// iterate of 1 at a non-negative integer vector x:
///
///   G_0(x) = 1
///   G_k(x) = G_{k-1}(x) + sum_i sum_{j=0}^{x_i - 1} G_{k-1}(x | x_i -> j)
///
/// memoized on the sorted key. Equals evaluate(gamma(k + 3), x) when
/// x.size() == k + 3. Requires x.size() >= k + 1 so every intermediate stays
/// inside the stable range (degree of the j-th iterate is at most j < k + 1);
/// smaller vectors throw std::invalid_argument, as do negative entries.
Int oracle_value(int k, std::vector<long long> x, GammaCache& cache);

}  // namespace psi0
