#include "chainex/permutahedron.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "json.hpp"

namespace chainex::perm {

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks, int n)
    : blocks_(std::move(blocks)), n_(n) {
  if (n_ < 1) throw std::invalid_argument("OrderedSetPartition: n must be >= 1");
  std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
  size_t total = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("OrderedSetPartition: empty block");
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n_) throw std::invalid_argument("OrderedSetPartition: element out of range");
      if (seen[v]) throw std::invalid_argument("OrderedSetPartition: repeated element");
      seen[v] = 1;
    }
    total += b.size();
  }
  if (static_cast<int>(total) != n_)
    throw std::invalid_argument("OrderedSetPartition: blocks must cover {1..n}");
}

int OrderedSetPartition::block_index(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("block_index: element out of range");
  for (size_t b = 0; b < blocks_.size(); ++b)
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), i))
      return static_cast<int>(b) + 1;
  return 0;  // unreachable for a valid partition
}

std::vector<int> OrderedSetPartition::block_index_table() const {
  std::vector<int> table(static_cast<size_t>(n_) + 1, 0);
  for (size_t b = 0; b < blocks_.size(); ++b)
    for (int v : blocks_[b]) table[v] = static_cast<int>(b) + 1;
  return table;
}

std::string OrderedSetPartition::label() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '[';
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i]);
    }
    out += ']';
  }
  return out;
}

std::string OrderedSetPartition::json() const {
  nlohmann::json j = blocks_;
  return j.dump();
}

OrderedSetPartition parse_partition_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  auto blocks = j.get<std::vector<std::vector<int>>>();
  size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  return OrderedSetPartition(std::move(blocks), static_cast<int>(total));
}

bool vertex_leq(const PermVertex& u, const PermVertex& v) {
  const int n = static_cast<int>(u.word.size());
  if (v.word.size() != u.word.size())
    throw std::invalid_argument("vertex_leq: mismatched ground sets");
  std::vector<int> pu(static_cast<size_t>(n) + 1), pv(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    pu[u.word[i]] = i;
    pv[v.word[i]] = i;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pu[i] > pu[j] && pv[i] < pv[j]) return false;
  return true;
}

bool weak_face_leq(const OrderedSetPartition& tau, const OrderedSetPartition& rho) {
  if (tau.n() != rho.n()) throw std::invalid_argument("weak_face_leq: mismatched ground sets");
  const std::vector<int> t = tau.block_index_table();
  const std::vector<int> r = rho.block_index_table();
  const int n = tau.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (t[i] >= t[j] && r[i] <= r[j]) return false;
  return true;
}

std::pair<PermVertex, PermVertex> face_extremes(const OrderedSetPartition& p) {
  PermVertex bottom, top;
  bottom.word.reserve(p.n());
  top.word.reserve(p.n());
  for (const auto& b : p.blocks()) {
    for (auto it = b.begin(); it != b.end(); ++it) bottom.word.push_back(*it);
    for (auto it = b.rbegin(); it != b.rend(); ++it) top.word.push_back(*it);
  }
  return {bottom, top};
}

std::vector<int> PartitionChain::dims() const {
  std::vector<int> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.dim());
  return out;
}

long long PartitionChain::excess() const {
  return core::chain_excess(dims(), ambient_dim());
}

PartitionChain make_chain(std::vector<OrderedSetPartition> members) {
  if (members.empty()) throw std::invalid_argument("make_chain: empty chain");
  const int n = members.front().n();
  for (const auto& m : members)
    if (m.n() != n) throw std::invalid_argument("make_chain: mixed ground sets");
  for (size_t i = 0; i + 1 < members.size(); ++i)
    if (!weak_face_leq(members[i], members[i + 1]))
      throw std::invalid_argument("make_chain: members " + std::to_string(i + 1) + " and " +
                                  std::to_string(i + 2) + " are not related");
  PartitionChain c;
  c.members = std::move(members);
  c.ground_size = n;
  return c;
}

namespace {

// Labels 1..a placed row-major in a grid of the given width. Member 1 groups
// by row, top to bottom; member l >= 2 groups by the key c + (l-2) r with
// blocks emitted in decreasing key order.
OrderedSetPartition grid_member(int width, int a, int l) {
  std::map<long long, std::vector<int>, std::greater<>> groups;
  for (int label = 1; label <= a; ++label) {
    const long long r = (label - 1) / width;
    const long long c = (label - 1) % width;
    const long long key = (l == 1) ? -r : c + static_cast<long long>(l - 2) * r;
    groups[key].push_back(label);
  }
  std::vector<std::vector<int>> blocks;
  blocks.reserve(groups.size());
  for (auto& [key, block] : groups) blocks.push_back(std::move(block));
  return OrderedSetPartition(std::move(blocks), a);
}

}  // namespace

PartitionChain zebra_chain(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("zebra_chain: m, n, k must be >= 1");
  std::vector<OrderedSetPartition> members;
  members.reserve(k);
  for (int l = 1; l <= k; ++l) members.push_back(grid_member(n, m * n, l));
  return make_chain(std::move(members));
}

PartitionChain partial_zebra_chain(int a, int k) {
  if (a < 1 || k < 1) throw std::invalid_argument("partial_zebra_chain: a, k must be >= 1");
  int s = 0;
  while ((s + 1) * (s + 1) <= a - 1) ++s;  // s = floor(sqrt(a-1))
  const int width = s + 1;
  std::vector<OrderedSetPartition> members;
  members.reserve(k);
  for (int l = 1; l <= k; ++l) members.push_back(grid_member(width, a, l));
  return make_chain(std::move(members));
}

int zebra_part_count(int n, int l) {
  if (n < 1 || l < 1) throw std::invalid_argument("zebra_part_count: n, l must be >= 1");
  return grid_member(n, n * n, l).block_count();
}

namespace {

void enumerate_partitions(const std::vector<int>& remaining,
                          std::vector<std::vector<int>>& current,
                          std::vector<OrderedSetPartition>& out, int n) {
  if (remaining.empty()) {
    out.emplace_back(current, n);
    return;
  }
  const int r = static_cast<int>(remaining.size());
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> block, rest;
    for (int i = 0; i < r; ++i)
      ((mask >> i) & 1u ? block : rest).push_back(remaining[i]);
    current.push_back(std::move(block));
    enumerate_partitions(rest, current, out, n);
    current.pop_back();
  }
}

// (i, j) -> index into the triangular pair list, i < j, both 1-based
inline int pair_slot(int i, int j, int n) {
  return (i - 1) * n - (i * (i + 1)) / 2 + j - 1;
}

uint64_t inversion_mask(const std::vector<int>& word, int n) {
  std::vector<int> pos(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) pos[word[i]] = i;
  uint64_t mask = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pos[i] > pos[j]) mask |= 1ull << pair_slot(i, j, n);
  return mask;
}

}  // namespace

core::OrientedPolytope permutahedron_polytope(int n, int cap) {
  if (n < 1) throw std::invalid_argument("permutahedron_polytope: n must be >= 1");
  if (n > cap)
    throw ResourceLimitError("permutahedron(" + std::to_string(n) +
                             ") exceeds the enumeration cap " + std::to_string(cap));

  std::vector<int> ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i + 1;
  auto parts = std::make_shared<std::vector<OrderedSetPartition>>();
  std::vector<std::vector<int>> current;
  enumerate_partitions(ground, current, *parts, n);
  std::sort(parts->begin(), parts->end(),
            [](const OrderedSetPartition& a, const OrderedSetPartition& b) {
              if (a.dim() != b.dim()) return a.dim() > b.dim();
              return a.blocks() < b.blocks();
            });

  core::OrientedPolytope p;
  p.name = "permutahedron(" + std::to_string(n) + ")";
  p.ambient_dim = n - 1;

  std::map<std::vector<int>, int> vid_of_word;
  for (size_t f = 0; f < parts->size(); ++f) {
    if ((*parts)[f].dim() == 0) {
      auto [bottom, top] = face_extremes((*parts)[f]);
      vid_of_word.emplace(bottom.word, p.num_vertices++);
      p.vertex_face.push_back(static_cast<int>(f));
    }
  }

  std::vector<uint64_t> inv(static_cast<size_t>(p.num_vertices));
  p.faces.reserve(parts->size());
  for (const auto& part : *parts) {
    core::FaceInfo fi;
    fi.dim = part.dim();
    fi.label = part.label();
    fi.json = part.json();
    auto [bottom, top] = face_extremes(part);
    fi.bottom = vid_of_word.at(bottom.word);
    fi.top = vid_of_word.at(top.word);
    p.faces.push_back(std::move(fi));
  }
  for (const auto& [word, vid] : vid_of_word) inv[vid] = inversion_mask(word, n);

  p.vertex_order.assign(static_cast<size_t>(p.num_vertices) * p.num_vertices, 0);
  for (int u = 0; u < p.num_vertices; ++u)
    for (int v = 0; v < p.num_vertices; ++v)
      p.vertex_order[static_cast<size_t>(u) * p.num_vertices + v] = (inv[u] & ~inv[v]) == 0;

  p.contains = [parts](int f, int g) {
    const OrderedSetPartition& coarse = (*parts)[f];
    const OrderedSetPartition& fine = (*parts)[g];
    const std::vector<int> tf = coarse.block_index_table();
    int last = 0;
    for (const auto& block : fine.blocks()) {
      const int fb = tf[block.front()];
      for (int v : block)
        if (tf[v] != fb) return false;
      if (fb < last) return false;
      last = fb;
    }
    return true;
  };
  return p;
}

}  // namespace chainex::perm
