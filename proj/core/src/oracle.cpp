#include "psi0/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace psi0 {

const Int* GammaCache::find(int steps, const std::vector<long long>& sorted_key) const {
  std::scoped_lock lock(mutex_);
  const auto it = memo_.find(Key(steps, sorted_key));
  return it == memo_.end() ? nullptr : &it->second;
}

void GammaCache::store(int steps, std::vector<long long> sorted_key, Int value) {
  std::scoped_lock lock(mutex_);
  memo_.emplace(Key(steps, std::move(sorted_key)), std::move(value));
}

std::size_t GammaCache::size() const {
  std::scoped_lock lock(mutex_);
  return memo_.size();
}

namespace {

// x is sorted non-increasing throughout the recursion.
Int oracle_rec(int k, const std::vector<long long>& x, GammaCache& cache) {
  if (const Int* hit = cache.find(k, x)) return *hit;
  Int result;
  if (k == 0) {
    result = 1;
  } else {
    result = oracle_rec(k - 1, x, cache);
    std::vector<long long> reduced;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (long long j = 0; j < x[i]; ++j) {
        reduced = x;
        reduced[i] = j;
        std::sort(reduced.begin(), reduced.end(), std::greater<long long>());
        result += oracle_rec(k - 1, reduced, cache);
      }
    }
  }
  cache.store(k, x, result);
  return result;
}

}  // namespace

Int oracle_value(int k, std::vector<long long> x, GammaCache& cache) {
  if (k < 0) throw std::invalid_argument("oracle_value: step count must be non-negative");
  for (long long entry : x)
    if (entry < 0) throw std::invalid_argument("oracle_value: entries must be non-negative");
  if (static_cast<int>(x.size()) < k + 1)
    throw std::invalid_argument(
        "oracle_value: need at least k + 1 entries to stay in the stable range");
  std::sort(x.begin(), x.end(), std::greater<long long>());
  return oracle_rec(k, x, cache);
}

}  // namespace psi0
