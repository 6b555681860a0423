#pragma once

#include <deque>
#include <mutex>
#include <vector>

#include "relsig/rational.hpp"

namespace relsig {

namespace detail {

struct PascalCache {
  std::mutex mutex;
  std::deque<std::vector<Int>> rows;  // rows[n][k] = C(n, k); deque keeps references stable
};

inline PascalCache& pascal_cache() {
  static PascalCache cache;
  return cache;
}

}  // namespace detail

// Row n of Pascal's triangle in exact integers, built by the additive
// recurrence and memoized. The returned reference stays valid for the
// lifetime of the program.
inline const std::vector<Int>& binomial_row(int n) {
  auto& cache = detail::pascal_cache();
  std::scoped_lock lock(cache.mutex);
  while (static_cast<int>(cache.rows.size()) <= n) {
    const int m = static_cast<int>(cache.rows.size());
    std::vector<Int> row(m + 1);
    row[0] = 1;
    row[m] = 1;
    if (m >= 2) {
      const auto& prev = cache.rows[m - 1];
      for (int k = 1; k < m; ++k) row[k] = prev[k - 1] + prev[k];
    }
    cache.rows.push_back(std::move(row));
  }
  return cache.rows[n];
}

// C(n, k); zero outside 0 <= k <= n.
inline Int binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  return binomial_row(n)[k];
}

}  // namespace relsig
