#include "chainex/reference_polytopes.hpp"

#include <algorithm>
#include <memory>

namespace chainex::refpoly {

core::OrientedPolytope simplex_polytope(int n, int cap) {
  if (n < 0) throw std::invalid_argument("simplex_polytope: n must be >= 0");
  if (n > cap)
    throw ResourceLimitError("simplex(" + std::to_string(n) + ") exceeds the enumeration cap " +
                             std::to_string(cap));

  auto subsets = std::make_shared<std::vector<unsigned>>();
  for (unsigned mask = 1; mask < (1u << (n + 1)); ++mask) subsets->push_back(mask);
  std::sort(subsets->begin(), subsets->end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa > pb;
    return a < b;
  });

  core::OrientedPolytope p;
  p.name = "simplex(" + std::to_string(n) + ")";
  p.ambient_dim = n;
  p.num_vertices = n + 1;
  p.vertex_face.assign(static_cast<size_t>(n) + 1, -1);

  p.faces.reserve(subsets->size());
  for (size_t f = 0; f < subsets->size(); ++f) {
    const unsigned mask = (*subsets)[f];
    core::FaceInfo fi;
    fi.dim = __builtin_popcount(mask) - 1;
    fi.bottom = __builtin_ctz(mask);
    fi.top = 31 - __builtin_clz(mask);
    std::string elems;
    for (int v = 0; v <= n; ++v) {
      if (!((mask >> v) & 1u)) continue;
      if (!elems.empty()) elems += ',';
      elems += std::to_string(v);
    }
    fi.label = "[" + elems + "]";
    fi.json = fi.label;
    if (fi.dim == 0) p.vertex_face[fi.bottom] = static_cast<int>(f);
    p.faces.push_back(std::move(fi));
  }

  p.vertex_order.assign(static_cast<size_t>(p.num_vertices) * p.num_vertices, 0);
  for (int u = 0; u < p.num_vertices; ++u)
    for (int v = u; v < p.num_vertices; ++v)
      p.vertex_order[static_cast<size_t>(u) * p.num_vertices + v] = 1;

  p.contains = [subsets](int f, int g) {
    return ((*subsets)[g] & ~(*subsets)[f]) == 0;
  };
  return p;
}

core::OrientedPolytope cube_polytope(int n, int cap) {
  if (n < 0) throw std::invalid_argument("cube_polytope: n must be >= 0");
  if (n > cap)
    throw ResourceLimitError("cube(" + std::to_string(n) + ") exceeds the enumeration cap " +
                             std::to_string(cap));

  // words over {0,1,*}; word[i] is coordinate i
  auto words = std::make_shared<std::vector<std::string>>();
  std::string w(static_cast<size_t>(n), '0');
  const char digits[3] = {'0', '1', '*'};
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n; ++i) {
      w[i] = digits[c % 3];
      c /= 3;
    }
    words->push_back(w);
  }
  std::sort(words->begin(), words->end(), [](const std::string& a, const std::string& b) {
    const auto stars = [](const std::string& s) { return std::count(s.begin(), s.end(), '*'); };
    const auto sa = stars(a), sb = stars(b);
    if (sa != sb) return sa > sb;
    return a < b;
  });

  core::OrientedPolytope p;
  p.name = "cube(" + std::to_string(n) + ")";
  p.ambient_dim = n;
  p.num_vertices = 1 << n;
  p.vertex_face.assign(static_cast<size_t>(p.num_vertices), -1);

  auto vid = [](const std::string& word, char star_as) {
    int id = 0;
    for (size_t i = 0; i < word.size(); ++i) {
      const char c = word[i] == '*' ? star_as : word[i];
      if (c == '1') id |= 1 << i;
    }
    return id;
  };

  p.faces.reserve(words->size());
  for (size_t f = 0; f < words->size(); ++f) {
    const std::string& word = (*words)[f];
    core::FaceInfo fi;
    fi.dim = static_cast<int>(std::count(word.begin(), word.end(), '*'));
    fi.bottom = vid(word, '0');
    fi.top = vid(word, '1');
    fi.label = word;
    fi.json = "\"" + word + "\"";
    if (fi.dim == 0) p.vertex_face[fi.bottom] = static_cast<int>(f);
    p.faces.push_back(std::move(fi));
  }

  p.vertex_order.assign(static_cast<size_t>(p.num_vertices) * p.num_vertices, 0);
  for (int u = 0; u < p.num_vertices; ++u)
    for (int v = 0; v < p.num_vertices; ++v)
      p.vertex_order[static_cast<size_t>(u) * p.num_vertices + v] = (u & ~v) == 0;

  p.contains = [words](int f, int g) {
    const std::string& coarse = (*words)[f];
    const std::string& fine = (*words)[g];
    for (size_t i = 0; i < coarse.size(); ++i)
      if (coarse[i] != '*' && fine[i] != coarse[i]) return false;
    return true;
  };
  return p;
}

}  // namespace chainex::refpoly
