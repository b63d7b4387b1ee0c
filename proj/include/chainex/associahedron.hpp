#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chainex/oriented_polytope.hpp"

namespace chainex::assoc {

// A face of the associahedron K(n): a planar rooted tree on n leaves whose
// internal nodes all have at least two children. Binary trees are the
// vertices; dimension is (n-1) minus the number of internal nodes.
class PlanarTree {
 public:
  PlanarTree() = default;                                  // a leaf
  explicit PlanarTree(std::vector<PlanarTree> children);   // internal node

  static PlanarTree leaf() { return PlanarTree(); }
  static PlanarTree node(std::vector<PlanarTree> children) {
    return PlanarTree(std::move(children));
  }

  bool is_leaf() const { return children_.empty(); }
  const std::vector<PlanarTree>& children() const { return children_; }
  int leaf_count() const { return leaves_; }
  int internal_count() const { return internals_; }
  int dim() const { return leaves_ - 1 - internals_; }
  bool is_binary() const { return dim() == 0; }

  std::string json() const;  // nested arrays, leaf = 0: corolla(3) = [0,0,0]

  // Leaf intervals [lo, hi] (1-based) of the internal nodes, sorted.
  // Containment of faces is inclusion of these interval sets.
  std::vector<std::pair<int, int>> intervals() const;

  bool operator==(const PlanarTree& other) const {
    return leaves_ == other.leaves_ && internals_ == other.internals_ &&
           children_ == other.children_;
  }

 private:
  std::vector<PlanarTree> children_;
  int leaves_ = 1;
  int internals_ = 0;
};

PlanarTree parse_tree_json(const std::string& text);

// Per-gap left endpoints of a binary tree's internal nodes; the lattice
// order is the componentwise order on these vectors.
std::vector<int> tamari_key(const PlanarTree& t);

// t <= u in the rotation order on binary trees (left comb minimal, right
// comb maximal). Componentwise key comparison; the rotation-closure oracle
// in the test suite is the semantic cross-check.
bool tamari_leq(const PlanarTree& t, const PlanarTree& u);

// All trees one increasing rotation above t: ((AB)C) -> (A(BC)).
std::vector<PlanarTree> tamari_up_covers(const PlanarTree& t);

// (bottom, top): every internal node replaced by the left resp. right comb
// on its children; the extreme binary refinements of the face.
std::pair<PlanarTree, PlanarTree> tree_face_extremes(const PlanarTree& t);

// f <= g iff top(f) <= bottom(g) in the rotation order.
bool tree_face_leq(const PlanarTree& f, const PlanarTree& g);

// Replace the leaf_index-th leaf (0-based, left to right) of t1 by t2.
// Dimension-additive; the result has leaf_count(t1) + leaf_count(t2) - 1 leaves.
PlanarTree graft(const PlanarTree& t1, int leaf_index, const PlanarTree& t2);

// The maximally nested bracketing tree on n leaves, e.g. (1(2(34)5)6):
// floor(n/2) internal nodes, dimension floor((n-1)/2).
PlanarTree thuja(int n);

// The right comb on m leaves, the maximal binary tree.
PlanarTree t_max(int m);

struct LeaningCount {
  int down = 0;  // inner edges to a right child
  int up = 0;    // inner edges to a left child
};

// Counts only edges between two internal nodes of a binary tree;
// down + up = n - 2.
LeaningCount leaning_counts(const PlanarTree& v);

struct TreeChain {
  std::vector<PlanarTree> members;
  int leaf_count = 0;  // n; the chain lives in K(n)

  int ambient_dim() const { return leaf_count - 2; }
  std::vector<int> dims() const;
  long long excess() const;
};

// Validates consecutive pairs under tree_face_leq; throws on violation.
TreeChain make_chain(std::vector<PlanarTree> members);

// Member l grafts thuja(n-l+1) into the rightmost leaf of t_max(l);
// member l has dimension floor((n-l)/2). Requires 1 <= k <= n-1.
TreeChain thuja_chain(int n, int k);

// (n-3) - sum_{l=1..k} (floor((n-l)/2) - 1); cross-checked on every call
// against the excess of the constructed chain.
long long thuja_excess(int n, int k);

inline constexpr int kDefaultCap = 9;

// All planar trees on n leaves (little Schroeder many) resp. all binary
// trees (Catalan many), in a deterministic enumeration order.
std::vector<PlanarTree> all_trees(int n, int cap = kDefaultCap);
std::vector<PlanarTree> all_binary_trees(int n);

struct TwoShortReport {
  int n = 0;
  bool pass = true;
  long long face_pairs_checked = 0;
  long long vertex_pairs_checked = 0;
  std::string witness;  // description of the first violation, if any
};

// Verifies dim F + dim G <= n-2 for every comparable face pair, and
// independently down(V) + up(W) <= n-2 for every comparable vertex pair.
TwoShortReport two_short_check(int n, int cap = kDefaultCap);

// All trees on n leaves wired into the core interface. Face count is the
// little Schroeder number; ambient dimension n-2.
core::OrientedPolytope associahedron_polytope(int n, int cap = kDefaultCap);

}  // namespace chainex::assoc
