#include "chainex/core.hpp"

namespace chainex::core {

long long chain_excess(const std::vector<int>& member_dims, int ambient_dim) {
  if (member_dims.empty()) throw std::invalid_argument("chain_excess: empty chain");
  long long sum = 0;
  for (int d : member_dims) {
    if (d < 0 || d > ambient_dim) throw std::invalid_argument("chain_excess: bad member dimension");
    sum += d - 1;
  }
  return static_cast<long long>(ambient_dim) - 1 - sum;
}

long long facet_bound(long long k, long long n) {
  return (1 - k) * n + 2 * k - 1;
}

}  // namespace chainex::core
