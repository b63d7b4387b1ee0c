#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracles {

using chainex::assoc::PlanarTree;
using chainex::core::OrientedPolytope;

namespace {

void extend_chain(const OrientedPolytope& p, const std::vector<int>& proper, int k,
                  std::vector<int>& chain, long long sum, BruteResult& best, bool& any) {
  if (static_cast<int>(chain.size()) == k) {
    any = true;
    if (sum > best.f_k) best.f_k = sum;
    return;
  }
  for (int f : proper) {
    if (!chain.empty() && !p.face_leq(chain.back(), f)) continue;
    chain.push_back(f);
    extend_chain(p, proper, k, chain, sum + p.faces[f].dim, best, any);
    chain.pop_back();
  }
}

}  // namespace

std::optional<BruteResult> brute_min_excess(const OrientedPolytope& p, int k) {
  std::vector<int> proper;
  for (int f = 0; f < p.face_count(); ++f)
    if (p.faces[f].dim < p.ambient_dim) proper.push_back(f);

  BruteResult best;
  best.f_k = -1;
  bool any = false;
  std::vector<int> chain;
  extend_chain(p, proper, k, chain, 0, best, any);
  if (!any) return std::nullopt;
  best.e_k = p.ambient_dim - 1 - (best.f_k - k);
  return best;
}

RotationClosure rotation_closure(int n) {
  RotationClosure rc;
  rc.trees = chainex::assoc::all_binary_trees(n);
  for (size_t i = 0; i < rc.trees.size(); ++i) rc.index_of[rc.trees[i].json()] = static_cast<int>(i);

  const size_t count = rc.trees.size();
  rc.leq.assign(count, std::vector<bool>(count, false));
  for (size_t i = 0; i < count; ++i) rc.leq[i][i] = true;
  for (size_t i = 0; i < count; ++i)
    for (const PlanarTree& up : chainex::assoc::tamari_up_covers(rc.trees[i]))
      rc.leq[i][rc.index_of.at(up.json())] = true;
  // Floyd-Warshall closure
  for (size_t m = 0; m < count; ++m)
    for (size_t i = 0; i < count; ++i) {
      if (!rc.leq[i][m]) continue;
      for (size_t j = 0; j < count; ++j)
        if (rc.leq[m][j]) rc.leq[i][j] = true;
    }
  return rc;
}

PermClosure perm_closure(int n) {
  PermClosure pc;
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  do {
    pc.index_of[word] = static_cast<int>(pc.words.size());
    pc.words.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));

  const size_t count = pc.words.size();
  pc.leq.assign(count, std::vector<bool>(count, false));
  for (size_t i = 0; i < count; ++i) {
    pc.leq[i][i] = true;
    for (int pos = 0; pos + 1 < n; ++pos) {
      if (pc.words[i][pos] < pc.words[i][pos + 1]) {  // swap adds one inversion
        std::vector<int> next = pc.words[i];
        std::swap(next[pos], next[pos + 1]);
        pc.leq[i][pc.index_of.at(next)] = true;
      }
    }
  }
  for (size_t m = 0; m < count; ++m)
    for (size_t i = 0; i < count; ++i) {
      if (!pc.leq[i][m]) continue;
      for (size_t j = 0; j < count; ++j)
        if (pc.leq[m][j]) pc.leq[i][j] = true;
    }
  return pc;
}

std::vector<PlanarTree> binary_refinements(const PlanarTree& t) {
  if (t.is_leaf()) return {t};

  std::vector<std::vector<PlanarTree>> child_options;
  for (const PlanarTree& c : t.children()) child_options.push_back(binary_refinements(c));

  const int arity = static_cast<int>(t.children().size());
  const std::vector<PlanarTree> shapes = chainex::assoc::all_binary_trees(arity);

  // Substitute a choice of refined children into every binary shape.
  std::vector<PlanarTree> out;
  std::vector<size_t> pick(child_options.size(), 0);
  bool more = true;
  while (more) {
    for (const PlanarTree& shape : shapes) {
      int next_leaf = 0;
      auto substitute = [&](auto&& self, const PlanarTree& node) -> PlanarTree {
        if (node.is_leaf()) {
          const int slot = next_leaf++;
          return child_options[slot][pick[slot]];
        }
        return PlanarTree::node(
            {self(self, node.children()[0]), self(self, node.children()[1])});
      };
      out.push_back(substitute(substitute, shape));
    }
    more = false;
    for (size_t i = child_options.size(); i-- > 0;) {
      if (++pick[i] < child_options[i].size()) {
        more = true;
        break;
      }
      pick[i] = 0;
    }
  }
  return out;
}

std::vector<std::vector<int>> face_vertices(const chainex::perm::OrderedSetPartition& p) {
  std::vector<std::vector<int>> words{{}};
  for (const auto& block : p.blocks()) {
    std::vector<int> perm = block;  // already sorted
    std::vector<std::vector<int>> grown;
    do {
      for (const auto& prefix : words) {
        std::vector<int> w = prefix;
        w.insert(w.end(), perm.begin(), perm.end());
        grown.push_back(w);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    words = std::move(grown);
  }
  return words;
}

}  // namespace oracles
