#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chainex {

// Thrown when an instance is refused because it exceeds an enumeration cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

namespace core {

// Excess of a face chain with the given member dimensions inside a polytope
// of dimension ambient_dim: (ambient_dim - 1) - sum(dim_i - 1).
long long chain_excess(const std::vector<int>& member_dims, int ambient_dim);

// Excess of a hypothetical chain of k facets in a dimension-n polytope:
// (n - 1) - k (n - 2) = (1 - k) n + 2k - 1.
long long facet_bound(long long k, long long n);

}  // namespace core
}  // namespace chainex
