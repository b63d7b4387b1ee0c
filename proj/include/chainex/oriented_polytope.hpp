#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chainex/core.hpp"

namespace chainex::core {

struct FaceInfo {
  int dim = 0;
  int bottom = 0;  // vertex ids
  int top = 0;
  std::string label;  // display form
  std::string json;   // serialized form, parseable
};

// A polytope given purely combinatorially: faces with dimensions and extreme
// vertices, plus the vertex partial order induced by orienting the 1-skeleton.
// The face list contains every nonempty face including the polytope itself.
struct OrientedPolytope {
  std::string name;
  int ambient_dim = 0;
  std::vector<FaceInfo> faces;
  int num_vertices = 0;
  std::vector<int> vertex_face;       // vertex id -> index of its dim-0 face
  std::vector<uint8_t> vertex_order;  // row-major num_vertices^2 leq matrix
  // contains(face, subface), non-strict; required for recursive shortness
  std::function<bool(int, int)> contains;

  bool vertex_leq(int u, int v) const {
    return vertex_order[static_cast<size_t>(u) * num_vertices + v] != 0;
  }
  // F <= G iff top(F) <= bottom(G); not reflexive above dimension 0
  bool face_leq(int f, int g) const {
    return vertex_leq(faces[f].top, faces[g].bottom);
  }
  int face_count() const { return static_cast<int>(faces.size()); }
};

// Index-checked variant; throws std::invalid_argument on unknown faces.
bool face_leq(const OrientedPolytope& p, int f, int g);

struct FaceChain {
  std::vector<int> faces;  // indices into the polytope
  int ambient_dim = 0;
};

struct MinExcessReport {
  int k = 0;
  long long e_k = 0;  // minimum excess over all k-chains of proper faces
  long long f_k = 0;  // maximum dimension sum over all k-chains
  FaceChain witness;
};

// Exact minimum excess over all k-chains of proper nonempty faces, by
// dynamic programming over the comparability relation. Ties between optimal
// witnesses are broken toward the lexicographically smallest index sequence.
// Returns nullopt when no k-chain exists (a polytope with no proper faces).
std::optional<MinExcessReport> min_excess(const OrientedPolytope& p, int k);

struct ChainWitness {
  std::vector<std::string> labels;
  std::vector<int> dims;
  long long excess = 0;
};

struct ShortnessReport {
  bool is_short = true;
  bool recursive = false;
  int regions_checked = 0;  // the polytope plus, in recursive mode, its faces
  // On failure: which region the violating chain lives in (empty string means
  // the polytope itself) and the chain found there.
  std::string violating_face;
  std::optional<ChainWitness> witness;
};

// Checks that every nontrivial chain (chain of proper nonempty faces) has
// positive excess. In recursive mode the same check runs inside every proper
// face, with the vertex order recomputed from that face's own 1-skeleton;
// this requires p.contains.
ShortnessReport shortness_report(const OrientedPolytope& p, bool recursive);

// The face-set of a proper face as a polytope in its own right: its proper
// subfaces, with the vertex order rebuilt from the face's own edges.
OrientedPolytope face_subpolytope(const OrientedPolytope& p, int face);

// Exhaustive check of the orientation invariants (partial-order axioms,
// unique source/sink, bottom <= top, dim 0 iff top == bottom). Returns
// human-readable descriptions of violations; empty means all hold.
std::vector<std::string> orientation_violations(const OrientedPolytope& p);

}  // namespace chainex::core
