#include "chainex/associahedron.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "json.hpp"

namespace chainex::assoc {

PlanarTree::PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {
  if (children_.size() == 1)
    throw std::invalid_argument("PlanarTree: internal nodes need at least two children");
  if (!children_.empty()) {
    leaves_ = 0;
    internals_ = 1;
    for (const PlanarTree& c : children_) {
      leaves_ += c.leaves_;
      internals_ += c.internals_;
    }
  }
}

std::string PlanarTree::json() const {
  if (is_leaf()) return "0";
  std::string out = "[";
  for (size_t i = 0; i < children_.size(); ++i) {
    if (i) out += ',';
    out += children_[i].json();
  }
  out += ']';
  return out;
}

namespace {

void collect_intervals(const PlanarTree& t, int lo, std::vector<std::pair<int, int>>& out) {
  if (t.is_leaf()) return;
  out.emplace_back(lo, lo + t.leaf_count() - 1);
  int at = lo;
  for (const PlanarTree& c : t.children()) {
    collect_intervals(c, at, out);
    at += c.leaf_count();
  }
}

PlanarTree tree_from_json(const nlohmann::json& j) {
  if (j.is_number_integer() && j.get<int>() == 0) return PlanarTree::leaf();
  if (!j.is_array()) throw std::invalid_argument("parse_tree_json: expected 0 or an array");
  std::vector<PlanarTree> children;
  children.reserve(j.size());
  for (const auto& c : j) children.push_back(tree_from_json(c));
  return PlanarTree::node(std::move(children));
}

}  // namespace

std::vector<std::pair<int, int>> PlanarTree::intervals() const {
  std::vector<std::pair<int, int>> out;
  collect_intervals(*this, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

PlanarTree parse_tree_json(const std::string& text) {
  return tree_from_json(nlohmann::json::parse(text));
}

namespace {

void fill_key(const PlanarTree& t, int lo, std::vector<int>& out) {
  if (t.is_leaf()) return;
  const PlanarTree& left = t.children()[0];
  // the node joining leaves m and m+1 records its interval's left endpoint
  const int split = lo + left.leaf_count() - 1;
  out[static_cast<size_t>(split) - 1] = lo;
  fill_key(left, lo, out);
  fill_key(t.children()[1], split + 1, out);
}

}  // namespace

std::vector<int> tamari_key(const PlanarTree& t) {
  if (!t.is_binary()) throw std::invalid_argument("tamari_key: tree is not binary");
  if (t.leaf_count() < 2) return {};
  std::vector<int> key(static_cast<size_t>(t.leaf_count()) - 1, 0);
  fill_key(t, 1, key);
  return key;
}

bool tamari_leq(const PlanarTree& t, const PlanarTree& u) {
  if (!t.is_binary() || !u.is_binary())
    throw std::invalid_argument("tamari_leq: both trees must be binary");
  if (t.leaf_count() != u.leaf_count())
    throw std::invalid_argument("tamari_leq: mismatched leaf counts");
  const std::vector<int> a = tamari_key(t);
  const std::vector<int> b = tamari_key(u);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<PlanarTree> tamari_up_covers(const PlanarTree& t) {
  if (!t.is_binary()) throw std::invalid_argument("tamari_up_covers: tree is not binary");
  std::vector<PlanarTree> out;
  if (t.is_leaf()) return out;
  const PlanarTree& left = t.children()[0];
  const PlanarTree& right = t.children()[1];
  if (!left.is_leaf()) {
    // ((AB)C) -> (A(BC))
    out.push_back(PlanarTree::node(
        {left.children()[0], PlanarTree::node({left.children()[1], right})}));
  }
  for (const PlanarTree& moved : tamari_up_covers(left))
    out.push_back(PlanarTree::node({moved, right}));
  for (const PlanarTree& moved : tamari_up_covers(right))
    out.push_back(PlanarTree::node({left, moved}));
  return out;
}

namespace {

PlanarTree combify(const PlanarTree& t, bool left_comb) {
  if (t.is_leaf()) return t;
  std::vector<PlanarTree> conv;
  conv.reserve(t.children().size());
  for (const PlanarTree& c : t.children()) conv.push_back(combify(c, left_comb));
  if (left_comb) {
    PlanarTree acc = conv[0];
    for (size_t i = 1; i < conv.size(); ++i) acc = PlanarTree::node({acc, conv[i]});
    return acc;
  }
  PlanarTree acc = conv.back();
  for (size_t i = conv.size() - 1; i-- > 0;) acc = PlanarTree::node({conv[i], acc});
  return acc;
}

}  // namespace

std::pair<PlanarTree, PlanarTree> tree_face_extremes(const PlanarTree& t) {
  return {combify(t, true), combify(t, false)};
}

bool tree_face_leq(const PlanarTree& f, const PlanarTree& g) {
  if (f.leaf_count() != g.leaf_count())
    throw std::invalid_argument("tree_face_leq: mismatched leaf counts");
  return tamari_leq(combify(f, false), combify(g, true));
}

namespace {

PlanarTree graft_rec(const PlanarTree& t1, int& countdown, const PlanarTree& t2) {
  if (t1.is_leaf()) {
    if (countdown-- == 0) return t2;
    return t1;
  }
  std::vector<PlanarTree> children;
  children.reserve(t1.children().size());
  for (const PlanarTree& c : t1.children()) {
    if (countdown >= c.leaf_count()) {
      countdown -= c.leaf_count();
      children.push_back(c);
    } else {
      children.push_back(graft_rec(c, countdown, t2));
    }
  }
  return PlanarTree::node(std::move(children));
}

}  // namespace

PlanarTree graft(const PlanarTree& t1, int leaf_index, const PlanarTree& t2) {
  if (leaf_index < 0 || leaf_index >= t1.leaf_count())
    throw std::invalid_argument("graft: leaf index out of range");
  int countdown = leaf_index;
  return graft_rec(t1, countdown, t2);
}

PlanarTree thuja(int n) {
  if (n < 2) throw std::invalid_argument("thuja: n must be >= 2");
  if (n == 2) return PlanarTree::node({PlanarTree::leaf(), PlanarTree::leaf()});
  if (n == 3)
    return PlanarTree::node({PlanarTree::leaf(), PlanarTree::leaf(), PlanarTree::leaf()});
  return PlanarTree::node({PlanarTree::leaf(), thuja(n - 2), PlanarTree::leaf()});
}

PlanarTree t_max(int m) {
  if (m < 1) throw std::invalid_argument("t_max: m must be >= 1");
  PlanarTree acc = PlanarTree::leaf();
  for (int i = 1; i < m; ++i) acc = PlanarTree::node({PlanarTree::leaf(), acc});
  return acc;
}

namespace {

void count_leaning(const PlanarTree& t, LeaningCount& lc) {
  if (t.is_leaf()) return;
  if (!t.children()[0].is_leaf()) ++lc.up;
  if (!t.children()[1].is_leaf()) ++lc.down;
  count_leaning(t.children()[0], lc);
  count_leaning(t.children()[1], lc);
}

}  // namespace

LeaningCount leaning_counts(const PlanarTree& v) {
  if (!v.is_binary()) throw std::invalid_argument("leaning_counts: tree is not binary");
  LeaningCount lc;
  count_leaning(v, lc);
  return lc;
}

std::vector<int> TreeChain::dims() const {
  std::vector<int> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.dim());
  return out;
}

long long TreeChain::excess() const {
  return core::chain_excess(dims(), ambient_dim());
}

TreeChain make_chain(std::vector<PlanarTree> members) {
  if (members.empty()) throw std::invalid_argument("make_chain: empty chain");
  const int n = members.front().leaf_count();
  for (const auto& m : members)
    if (m.leaf_count() != n) throw std::invalid_argument("make_chain: mixed leaf counts");
  for (size_t i = 0; i + 1 < members.size(); ++i)
    if (!tree_face_leq(members[i], members[i + 1]))
      throw std::invalid_argument("make_chain: members " + std::to_string(i + 1) + " and " +
                                  std::to_string(i + 2) + " are not related");
  TreeChain c;
  c.members = std::move(members);
  c.leaf_count = n;
  return c;
}

TreeChain thuja_chain(int n, int k) {
  if (n < 2) throw std::invalid_argument("thuja_chain: n must be >= 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("thuja_chain: k must satisfy 1 <= k <= n-1");
  std::vector<PlanarTree> members;
  members.reserve(k);
  for (int l = 1; l <= k; ++l) {
    PlanarTree base = t_max(l);
    members.push_back(graft(base, l - 1, thuja(n - l + 1)));
  }
  return make_chain(std::move(members));
}

long long thuja_excess(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw std::invalid_argument("thuja_excess: bad parameters");
  long long sum = 0;
  for (int l = 1; l <= k; ++l) sum += (n - l) / 2 - 1;
  const long long formula = (n - 3) - sum;
  const long long measured = thuja_chain(n, k).excess();
  if (formula != measured)
    throw std::logic_error("thuja_excess: formula and chain disagree at n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
  return formula;
}

namespace {

void compositions(int m, int min_parts, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (m == 0) {
    if (static_cast<int>(cur.size()) >= min_parts) out.push_back(cur);
    return;
  }
  for (int first = 1; first <= m; ++first) {
    cur.push_back(first);
    compositions(m - first, min_parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PlanarTree> all_trees(int n, int cap) {
  if (n < 1) throw std::invalid_argument("all_trees: n must be >= 1");
  if (n > cap)
    throw ResourceLimitError("associahedron(" + std::to_string(n) +
                             ") exceeds the enumeration cap " + std::to_string(cap));
  std::vector<std::vector<PlanarTree>> by_leaves(static_cast<size_t>(n) + 1);
  by_leaves[1] = {PlanarTree::leaf()};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(m, 2, cur, comps);
    for (const auto& comp : comps) {
      // odometer over the children choices
      std::vector<size_t> pick(comp.size(), 0);
      bool more = true;
      while (more) {
        std::vector<PlanarTree> children;
        children.reserve(comp.size());
        for (size_t i = 0; i < comp.size(); ++i)
          children.push_back(by_leaves[comp[i]][pick[i]]);
        by_leaves[m].push_back(PlanarTree::node(std::move(children)));
        more = false;
        for (size_t i = comp.size(); i-- > 0;) {
          if (++pick[i] < by_leaves[comp[i]].size()) {
            more = true;
            break;
          }
          pick[i] = 0;
        }
      }
    }
  }
  return by_leaves[n];
}

std::vector<PlanarTree> all_binary_trees(int n) {
  if (n < 1) throw std::invalid_argument("all_binary_trees: n must be >= 1");
  std::vector<std::vector<PlanarTree>> by_leaves(static_cast<size_t>(n) + 1);
  by_leaves[1] = {PlanarTree::leaf()};
  for (int m = 2; m <= n; ++m)
    for (int left = 1; left < m; ++left)
      for (const PlanarTree& lt : by_leaves[left])
        for (const PlanarTree& rt : by_leaves[m - left])
          by_leaves[m].push_back(PlanarTree::node({lt, rt}));
  return by_leaves[n];
}

TwoShortReport two_short_check(int n, int cap) {
  TwoShortReport rep;
  rep.n = n;
  if (n < 2) throw std::invalid_argument("two_short_check: n must be >= 2");
  const std::vector<PlanarTree> faces = all_trees(n, cap);

  std::vector<int> dims(faces.size());
  std::vector<std::vector<int>> key_top(faces.size()), key_bottom(faces.size());
  for (size_t i = 0; i < faces.size(); ++i) {
    dims[i] = faces[i].dim();
    auto [bottom, top] = tree_face_extremes(faces[i]);
    key_bottom[i] = tamari_key(bottom);
    key_top[i] = tamari_key(top);
  }
  auto leq = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };

  for (size_t f = 0; f < faces.size() && rep.pass; ++f)
    for (size_t g = 0; g < faces.size(); ++g) {
      if (!leq(key_top[f], key_bottom[g])) continue;
      ++rep.face_pairs_checked;
      if (dims[f] + dims[g] > n - 2) {
        rep.pass = false;
        rep.witness = "face pair " + faces[f].json() + " <= " + faces[g].json() +
                      " has dimension sum " + std::to_string(dims[f] + dims[g]);
        break;
      }
    }

  const std::vector<PlanarTree> vertices = all_binary_trees(n);
  std::vector<std::vector<int>> vkey(vertices.size());
  std::vector<LeaningCount> lean(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    vkey[i] = tamari_key(vertices[i]);
    lean[i] = leaning_counts(vertices[i]);
  }
  for (size_t v = 0; v < vertices.size() && rep.pass; ++v)
    for (size_t w = 0; w < vertices.size(); ++w) {
      if (!leq(vkey[v], vkey[w])) continue;
      ++rep.vertex_pairs_checked;
      if (lean[v].down + lean[w].up > n - 2) {
        rep.pass = false;
        rep.witness = "vertex pair " + vertices[v].json() + " <= " + vertices[w].json() +
                      " has down+up " + std::to_string(lean[v].down + lean[w].up);
        break;
      }
    }
  return rep;
}

core::OrientedPolytope associahedron_polytope(int n, int cap) {
  if (n < 2) throw std::invalid_argument("associahedron_polytope: n must be >= 2");
  auto trees = std::make_shared<std::vector<PlanarTree>>(all_trees(n, cap));
  std::sort(trees->begin(), trees->end(), [](const PlanarTree& a, const PlanarTree& b) {
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.json() < b.json();
  });

  core::OrientedPolytope p;
  p.name = "associahedron(" + std::to_string(n) + ")";
  p.ambient_dim = n - 2;

  std::map<std::string, int> vid_of_json;
  for (size_t f = 0; f < trees->size(); ++f) {
    if ((*trees)[f].dim() == 0) {
      vid_of_json.emplace((*trees)[f].json(), p.num_vertices++);
      p.vertex_face.push_back(static_cast<int>(f));
    }
  }

  std::vector<std::vector<int>> vkeys(static_cast<size_t>(p.num_vertices));
  p.faces.reserve(trees->size());
  for (const PlanarTree& t : *trees) {
    core::FaceInfo fi;
    fi.dim = t.dim();
    fi.label = t.json();
    fi.json = t.json();
    auto [bottom, top] = tree_face_extremes(t);
    fi.bottom = vid_of_json.at(bottom.json());
    fi.top = vid_of_json.at(top.json());
    if (t.dim() == 0) vkeys[fi.bottom] = tamari_key(t);
    p.faces.push_back(std::move(fi));
  }

  p.vertex_order.assign(static_cast<size_t>(p.num_vertices) * p.num_vertices, 0);
  for (int u = 0; u < p.num_vertices; ++u)
    for (int v = 0; v < p.num_vertices; ++v) {
      bool le = true;
      for (size_t i = 0; i < vkeys[u].size() && le; ++i) le = vkeys[u][i] <= vkeys[v][i];
      p.vertex_order[static_cast<size_t>(u) * p.num_vertices + v] = le;
    }

  auto intervals =
      std::make_shared<std::vector<std::vector<std::pair<int, int>>>>(trees->size());
  for (size_t f = 0; f < trees->size(); ++f) (*intervals)[f] = (*trees)[f].intervals();
  p.contains = [intervals](int f, int g) {
    // g is a subface of f iff every node interval of f survives in g
    return std::includes((*intervals)[g].begin(), (*intervals)[g].end(),
                         (*intervals)[f].begin(), (*intervals)[f].end());
  };
  return p;
}

}  // namespace chainex::assoc
