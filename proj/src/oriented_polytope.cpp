#include "chainex/oriented_polytope.hpp"

#include <algorithm>
#include <limits>
#include <memory>

namespace chainex::core {

namespace {
constexpr long long kUnreachable = std::numeric_limits<long long>::min() / 4;
}

bool face_leq(const OrientedPolytope& p, int f, int g) {
  if (f < 0 || f >= p.face_count() || g < 0 || g >= p.face_count())
    throw std::invalid_argument("face_leq: unknown face identifier");
  return p.face_leq(f, g);
}

std::optional<MinExcessReport> min_excess(const OrientedPolytope& p, int k) {
  if (k < 1) throw std::invalid_argument("min_excess: k must be >= 1");
  const int nf = p.face_count();
  const int nv = p.num_vertices;

  std::vector<char> proper(nf, 0);
  bool any = false;
  for (int f = 0; f < nf; ++f) {
    if (p.faces[f].dim < p.ambient_dim) {
      proper[f] = 1;
      any = true;
    }
  }
  if (!any) return std::nullopt;

  // suf[j][f]: best dimension sum of a chain of length j starting at f.
  // Successor maxima are aggregated per bottom vertex, so a stage costs
  // O(V^2 + F) instead of O(F^2).
  std::vector<std::vector<long long>> suf(
      static_cast<size_t>(k) + 1, std::vector<long long>(nf, kUnreachable));
  for (int f = 0; f < nf; ++f)
    if (proper[f]) suf[1][f] = p.faces[f].dim;

  std::vector<long long> by_bottom(nv), reach(nv);
  for (int j = 2; j <= k; ++j) {
    std::fill(by_bottom.begin(), by_bottom.end(), kUnreachable);
    for (int g = 0; g < nf; ++g) {
      if (suf[j - 1][g] == kUnreachable) continue;
      int v = p.faces[g].bottom;
      by_bottom[v] = std::max(by_bottom[v], suf[j - 1][g]);
    }
    for (int u = 0; u < nv; ++u) {
      long long best = kUnreachable;
      for (int v = 0; v < nv; ++v) {
        if (by_bottom[v] > best && p.vertex_leq(u, v)) best = by_bottom[v];
      }
      reach[u] = best;
    }
    for (int f = 0; f < nf; ++f) {
      if (!proper[f]) continue;
      long long succ = reach[p.faces[f].top];
      if (succ != kUnreachable) suf[j][f] = p.faces[f].dim + succ;
    }
  }

  long long opt = kUnreachable;
  for (int f = 0; f < nf; ++f) opt = std::max(opt, suf[k][f]);
  if (opt == kUnreachable) return std::nullopt;

  // Reconstruct the lexicographically smallest optimal index sequence.
  MinExcessReport r;
  r.k = k;
  r.f_k = opt;
  r.e_k = static_cast<long long>(p.ambient_dim) - 1 - (opt - k);
  r.witness.ambient_dim = p.ambient_dim;
  long long need = opt;
  int prev = -1;
  for (int step = 0; step < k; ++step) {
    const int j = k - step;
    for (int f = 0; f < nf; ++f) {
      if (suf[j][f] != need) continue;
      if (prev >= 0 && !p.face_leq(prev, f)) continue;
      r.witness.faces.push_back(f);
      need -= p.faces[f].dim;
      prev = f;
      break;
    }
  }
  return r;
}

namespace {

// Longest node-weighted chain among proper faces of dimension >= 2 (weight
// dim-1); lower-dimensional members never increase a chain's weight and the
// relation is transitive, so they can be dropped. A violation of shortness
// exists iff this maximum exceeds ambient_dim - 2.
struct RegionCheck {
  bool violated = false;
  ChainWitness witness;
};

RegionCheck check_region(const OrientedPolytope& p) {
  RegionCheck out;
  if (p.ambient_dim <= 2) return out;  // chains of dim<=1 faces cannot violate

  std::vector<int> heavy;
  for (int f = 0; f < p.face_count(); ++f)
    if (p.faces[f].dim >= 2 && p.faces[f].dim < p.ambient_dim) heavy.push_back(f);
  if (heavy.empty()) return out;

  // F <= G forces rank(bottom F) < rank(bottom G) here, giving a topological
  // order for the DP.
  std::vector<int> rank(p.num_vertices, 0);
  for (int v = 0; v < p.num_vertices; ++v)
    for (int u = 0; u < p.num_vertices; ++u)
      if (p.vertex_leq(u, v)) ++rank[v];

  std::vector<int> order = heavy;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int ra = rank[p.faces[a].bottom], rb = rank[p.faces[b].bottom];
    if (ra != rb) return ra > rb;
    return a < b;
  });

  // heavy is ascending, so taking the first maximum yields the smallest index.
  std::vector<long long> best(p.face_count(), 0);
  std::vector<int> next(p.face_count(), -1);
  for (int f : order) {
    long long follow = 0;
    int pick = -1;
    for (int g : heavy) {
      if (!p.face_leq(f, g)) continue;
      if (best[g] > follow) {
        follow = best[g];
        pick = g;
      }
    }
    best[f] = p.faces[f].dim - 1 + follow;
    next[f] = pick;
  }

  long long max_sum = 0;
  int start = -1;
  for (int f : heavy) {
    if (best[f] > max_sum) {
      max_sum = best[f];
      start = f;
    }
  }
  if (max_sum <= p.ambient_dim - 2) return out;

  out.violated = true;
  for (int f = start; f != -1; f = next[f]) {
    out.witness.labels.push_back(p.faces[f].label);
    out.witness.dims.push_back(p.faces[f].dim);
  }
  out.witness.excess = chain_excess(out.witness.dims, p.ambient_dim);
  return out;
}

}  // namespace

OrientedPolytope face_subpolytope(const OrientedPolytope& p, int face) {
  if (face < 0 || face >= p.face_count())
    throw std::invalid_argument("face_subpolytope: unknown face identifier");
  if (!p.contains)
    throw std::invalid_argument("face_subpolytope: polytope provides no containment test");

  OrientedPolytope sub;
  sub.name = p.name + " face " + p.faces[face].label;
  sub.ambient_dim = p.faces[face].dim;

  std::vector<int> orig;
  for (int g = 0; g < p.face_count(); ++g)
    if (g != face && p.contains(face, g)) orig.push_back(g);

  // Local vertex ids in global-vertex order.
  std::vector<int> local_vid(p.num_vertices, -1);
  for (int g : orig) {
    if (p.faces[g].dim == 0) {
      int v = p.faces[g].bottom;
      if (local_vid[v] < 0) {
        local_vid[v] = sub.num_vertices++;
        sub.vertex_face.push_back(-1);  // fixed below once faces are numbered
      }
    }
  }

  sub.faces.reserve(orig.size());
  for (size_t i = 0; i < orig.size(); ++i) {
    const FaceInfo& fi = p.faces[orig[i]];
    FaceInfo nf = fi;
    nf.bottom = local_vid[fi.bottom];
    nf.top = local_vid[fi.top];
    sub.faces.push_back(nf);
    if (nf.dim == 0) sub.vertex_face[nf.bottom] = static_cast<int>(i);
  }

  // Vertex order: reflexive-transitive closure of the face's own edges.
  const int nv = sub.num_vertices;
  sub.vertex_order.assign(static_cast<size_t>(nv) * nv, 0);
  auto set_leq = [&](int u, int v) { sub.vertex_order[static_cast<size_t>(u) * nv + v] = 1; };
  for (int v = 0; v < nv; ++v) set_leq(v, v);
  for (const FaceInfo& fi : sub.faces)
    if (fi.dim == 1) set_leq(fi.bottom, fi.top);
  for (int m = 0; m < nv; ++m)
    for (int u = 0; u < nv; ++u) {
      if (!sub.vertex_leq(u, m)) continue;
      for (int v = 0; v < nv; ++v)
        if (sub.vertex_leq(m, v)) set_leq(u, v);
    }

  auto orig_shared = std::make_shared<std::vector<int>>(std::move(orig));
  auto parent_contains = p.contains;
  sub.contains = [orig_shared, parent_contains](int f, int g) {
    return parent_contains((*orig_shared)[f], (*orig_shared)[g]);
  };
  return sub;
}

ShortnessReport shortness_report(const OrientedPolytope& p, bool recursive) {
  ShortnessReport rep;
  rep.recursive = recursive;

  rep.regions_checked = 1;
  RegionCheck top = check_region(p);
  if (top.violated) {
    rep.is_short = false;
    rep.violating_face = "";
    rep.witness = top.witness;
    return rep;
  }
  if (!recursive) return rep;

  for (int f = 0; f < p.face_count(); ++f) {
    if (p.faces[f].dim >= p.ambient_dim) continue;
    ++rep.regions_checked;
    if (p.faces[f].dim <= 2) continue;  // cannot host a violating chain
    OrientedPolytope sub = face_subpolytope(p, f);
    RegionCheck rc = check_region(sub);
    if (rc.violated) {
      rep.is_short = false;
      rep.violating_face = p.faces[f].label;
      rep.witness = rc.witness;
      return rep;
    }
  }
  return rep;
}

std::vector<std::string> orientation_violations(const OrientedPolytope& p) {
  std::vector<std::string> out;
  const int nv = p.num_vertices;

  for (int u = 0; u < nv; ++u)
    if (!p.vertex_leq(u, u)) out.push_back("not reflexive at vertex " + std::to_string(u));
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v)
      if (u != v && p.vertex_leq(u, v) && p.vertex_leq(v, u))
        out.push_back("not antisymmetric: " + std::to_string(u) + "," + std::to_string(v));
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v) {
      if (!p.vertex_leq(u, v)) continue;
      for (int w = 0; w < nv; ++w)
        if (p.vertex_leq(v, w) && !p.vertex_leq(u, w))
          out.push_back("not transitive: " + std::to_string(u) + "," + std::to_string(v) + "," +
                        std::to_string(w));
    }

  int mins = 0, maxs = 0;
  for (int v = 0; v < nv; ++v) {
    bool is_min = true, is_max = true;
    for (int u = 0; u < nv; ++u) {
      if (u == v) continue;
      if (!p.vertex_leq(v, u)) is_min = false;
      if (!p.vertex_leq(u, v)) is_max = false;
    }
    mins += is_min;
    maxs += is_max;
  }
  if (mins != 1) out.push_back("vertex order has " + std::to_string(mins) + " minima");
  if (maxs != 1) out.push_back("vertex order has " + std::to_string(maxs) + " maxima");

  for (int f = 0; f < p.face_count(); ++f) {
    const FaceInfo& fi = p.faces[f];
    if (!p.vertex_leq(fi.bottom, fi.top))
      out.push_back("bottom !<= top on face " + fi.label);
    if ((fi.dim == 0) != (fi.bottom == fi.top))
      out.push_back("dim-0 iff top==bottom fails on face " + fi.label);
  }
  return out;
}

}  // namespace chainex::core
