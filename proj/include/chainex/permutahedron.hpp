#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chainex/oriented_polytope.hpp"

namespace chainex::perm {

// A face of the permutahedron on {1..n}: an ordered partition into nonempty
// disjoint blocks covering the ground set. Elements are kept sorted within
// each block. Dimension is n minus the number of blocks.
class OrderedSetPartition {
 public:
  OrderedSetPartition(std::vector<std::vector<int>> blocks, int n);

  int n() const { return n_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int dim() const { return n_ - block_count(); }
  bool is_vertex() const { return block_count() == n_; }

  // 1-based index of the block containing i
  int block_index(int i) const;
  // value -> 1-based block index, for hot loops (index 0 unused)
  std::vector<int> block_index_table() const;

  std::string label() const;  // "[1,2][3]"
  std::string json() const;   // "[[1,2],[3]]"

  bool operator==(const OrderedSetPartition& other) const {
    return n_ == other.n_ && blocks_ == other.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  int n_ = 0;
};

OrderedSetPartition parse_partition_json(const std::string& text);

struct PermVertex {
  std::vector<int> word;  // a permutation of {1..n}
};

// u <= v iff every inversion of u is an inversion of v
bool vertex_leq(const PermVertex& u, const PermVertex& v);

// tau <= rho iff for every pair i < j, tau(i) < tau(j) or rho(i) > rho(j)
bool weak_face_leq(const OrderedSetPartition& tau, const OrderedSetPartition& rho);

// (bottom, top): blocks read ascending resp. descending. The unique minimal
// and maximal vertices of the face.
std::pair<PermVertex, PermVertex> face_extremes(const OrderedSetPartition& p);

struct PartitionChain {
  std::vector<OrderedSetPartition> members;
  int ground_size = 0;  // n; the chain lives in the permutahedron on {1..n}

  int ambient_dim() const { return ground_size - 1; }
  std::vector<int> dims() const;
  long long excess() const;
};

// Validates consecutive pairs under weak_face_leq; throws on violation.
PartitionChain make_chain(std::vector<OrderedSetPartition> members);

// The k-member chain built on the m-row, n-column grid: member 1 groups by
// row (top to bottom), member l >= 2 groups by the key c + (l-2) r with
// blocks ordered by decreasing key (l = 2 gives vertical lines).
PartitionChain zebra_chain(int m, int n, int k);

// Same keys on the grid of width floor(sqrt(a-1)) + 1 holding only 1..a;
// empty groups are dropped. Perfect squares coincide with zebra_chain.
PartitionChain partial_zebra_chain(int a, int k);

// Number of blocks of the l-th member on the n x n grid.
int zebra_part_count(int n, int l);

inline constexpr int kDefaultCap = 6;

// All ordered set partitions of {1..n} wired into the core interface.
// Face count is the ordered Bell number of n; ambient dimension n-1.
core::OrientedPolytope permutahedron_polytope(int n, int cap = kDefaultCap);

}  // namespace chainex::perm
