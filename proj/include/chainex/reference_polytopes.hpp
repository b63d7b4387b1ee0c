#pragma once

#include "chainex/oriented_polytope.hpp"

namespace chainex::refpoly {

inline constexpr int kSimplexCap = 8;
inline constexpr int kCubeCap = 5;

// Faces are the nonempty subsets of {0..n}; F <= G iff max F <= min G.
// 2^(n+1) - 1 faces.
core::OrientedPolytope simplex_polytope(int n, int cap = kSimplexCap);

// Faces are words over {0,1,*} of length n; vertex order is bitwise.
// 3^n faces.
core::OrientedPolytope cube_polytope(int n, int cap = kCubeCap);

}  // namespace chainex::refpoly
