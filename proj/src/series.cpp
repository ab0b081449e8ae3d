#include "dendrix/series.hpp"

#include <mutex>

namespace dendrix {

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  // Σ_{k=0}^{m} C(m+1,k) B_k = 0 for m ≥ 1.
  while (static_cast<int>(table.size()) <= n) {
    const int m = static_cast<int>(table.size());
    Rational s(0);
    for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * table[k];
    table.push_back(-s / Rational(m + 1));
  }
  return table[n];
}

}  // namespace dendrix
