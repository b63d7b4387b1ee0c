#include "doctest.h"

#include <algorithm>

#include "chainex/associahedron.hpp"
#include "oracles.hpp"

using namespace chainex;
using assoc::PlanarTree;

namespace {

PlanarTree lf() { return PlanarTree::leaf(); }
PlanarTree nd(std::vector<PlanarTree> ch) { return PlanarTree::node(std::move(ch)); }

}  // namespace

TEST_CASE("planar tree basics") {
  const PlanarTree corolla = nd({lf(), lf(), lf()});
  CHECK(corolla.leaf_count() == 3);
  CHECK(corolla.internal_count() == 1);
  CHECK(corolla.dim() == 1);
  CHECK_FALSE(corolla.is_binary());
  CHECK(corolla.json() == "[0,0,0]");
  CHECK_THROWS_AS(nd({lf()}), std::invalid_argument);

  const PlanarTree bin = nd({nd({lf(), lf()}), lf()});
  CHECK(bin.is_binary());
  CHECK(bin.dim() == 0);
  CHECK(assoc::parse_tree_json("[[0,0],0]") == bin);
  CHECK(assoc::parse_tree_json(bin.json()) == bin);
}

TEST_CASE("tree enumeration counts") {
  CHECK(assoc::all_trees(2).size() == 1);
  CHECK(assoc::all_trees(3).size() == 3);
  CHECK(assoc::all_trees(4).size() == 11);
  CHECK(assoc::all_trees(5).size() == 45);
  CHECK(assoc::all_trees(6).size() == 197);
  CHECK(assoc::all_binary_trees(4).size() == 5);
  CHECK(assoc::all_binary_trees(6).size() == 42);
}

TEST_CASE("rotation order basics") {
  for (int n = 2; n <= 7; ++n) {
    const PlanarTree corolla = nd(std::vector<PlanarTree>(static_cast<size_t>(n), lf()));
    const PlanarTree left = assoc::tree_face_extremes(corolla).first;
    const PlanarTree right = assoc::t_max(n);
    CHECK(assoc::tamari_leq(left, right));
  }
  // the single generating move on 3 leaves
  CHECK(assoc::tamari_leq(nd({nd({lf(), lf()}), lf()}), nd({lf(), nd({lf(), lf()})})));
  CHECK_FALSE(assoc::tamari_leq(nd({lf(), nd({lf(), lf()})}), nd({nd({lf(), lf()}), lf()})));
  CHECK_THROWS_AS(assoc::tamari_leq(nd({lf(), lf(), lf()}), nd({lf(), nd({lf(), lf()})})),
                  std::invalid_argument);
}

TEST_CASE("fast comparison equals the rotation closure") {
  for (int n = 2; n <= 7; ++n) {
    const auto closure = oracles::rotation_closure(n);
    const size_t count = closure.trees.size();
    for (size_t i = 0; i < count; ++i)
      for (size_t j = 0; j < count; ++j)
        CHECK(assoc::tamari_leq(closure.trees[i], closure.trees[j]) == closure.leq[i][j]);
  }
}

TEST_CASE("every generating move increases the order") {
  for (const PlanarTree& t : assoc::all_binary_trees(6))
    for (const PlanarTree& up : assoc::tamari_up_covers(t)) {
      CHECK(assoc::tamari_leq(t, up));
      CHECK_FALSE(assoc::tamari_leq(up, t));
    }
}

TEST_CASE("rotation does not increase the count of left-leaning edges") {
  for (int n = 3; n <= 8; ++n)
    for (const PlanarTree& t : assoc::all_binary_trees(n))
      for (const PlanarTree& up : assoc::tamari_up_covers(t))
        CHECK(assoc::leaning_counts(up).up <= assoc::leaning_counts(t).up);
}

TEST_CASE("face extremes of trees") {
  const PlanarTree bin = nd({lf(), nd({lf(), lf()})});
  const auto [b1, t1] = assoc::tree_face_extremes(bin);
  CHECK(b1 == bin);
  CHECK(t1 == bin);

  const PlanarTree corolla = nd({lf(), lf(), lf(), lf()});
  const auto [b2, t2] = assoc::tree_face_extremes(corolla);
  CHECK(b2 == nd({nd({nd({lf(), lf()}), lf()}), lf()}));  // left comb
  CHECK(t2 == assoc::t_max(4));                           // right comb
}

TEST_CASE("face extremes are the order-extremes of the binary refinements") {
  for (int n = 4; n <= 7; ++n) {
    const auto closure = oracles::rotation_closure(n);
    const auto faces = assoc::all_trees(n);
    for (const PlanarTree& face : faces) {
      if (face.is_binary()) continue;
      const auto [bottom, top] = assoc::tree_face_extremes(face);
      const int bi = closure.index_of.at(bottom.json());
      const int ti = closure.index_of.at(top.json());
      for (const PlanarTree& refinement : oracles::binary_refinements(face)) {
        const int ri = closure.index_of.at(refinement.json());
        CHECK(closure.leq[bi][ri]);
        CHECK(closure.leq[ri][ti]);
      }
    }
  }
}

TEST_CASE("grafting") {
  const PlanarTree t2 = nd({lf(), nd({lf(), lf()}), lf()});
  CHECK(assoc::graft(lf(), 0, t2) == t2);
  CHECK_THROWS_AS(assoc::graft(t2, 4, lf()), std::invalid_argument);

  // dimension additivity, exhaustively on small pairs
  for (int n1 = 1; n1 <= 5; ++n1)
    for (int n2 = 2; n2 <= 5; ++n2)
      for (const PlanarTree& a : assoc::all_trees(n1))
        for (const PlanarTree& b : assoc::all_trees(n2))
          for (int leaf = 0; leaf < n1; ++leaf) {
            const PlanarTree g = assoc::graft(a, leaf, b);
            CHECK(g.dim() == a.dim() + b.dim());
            CHECK(g.leaf_count() == n1 + n2 - 1);
          }
}

TEST_CASE("nested bracket trees") {
  CHECK(assoc::thuja(6) == nd({lf(), nd({lf(), nd({lf(), lf()}), lf()}), lf()}));
  CHECK(assoc::thuja(7) == nd({lf(), nd({lf(), nd({lf(), lf(), lf()}), lf()}), lf()}));
  CHECK(assoc::thuja(2) == nd({lf(), lf()}));
  CHECK_THROWS_AS(assoc::thuja(1), std::invalid_argument);
  for (int n = 2; n <= 15; ++n) {
    CHECK(assoc::thuja(n).internal_count() == n / 2);
    CHECK(assoc::thuja(n).dim() == (n - 1) / 2);
  }
}

TEST_CASE("the right comb is maximal") {
  CHECK(assoc::t_max(1) == lf());
  CHECK(assoc::t_max(2) == nd({lf(), lf()}));
  for (int m = 2; m <= 7; ++m) {
    const PlanarTree top = assoc::t_max(m);
    for (const PlanarTree& t : assoc::all_binary_trees(m)) CHECK(assoc::tamari_leq(t, top));
  }
}

TEST_CASE("thuja chain reproduces the 7-leaf instance exactly") {
  const auto chain = assoc::thuja_chain(7, 6);
  REQUIRE(chain.members.size() == 6);
  CHECK(chain.members[0].json() == "[0,[0,[0,0,0],0],0]");
  CHECK(chain.members[1].json() == "[0,[0,[0,[0,0],0],0]]");
  CHECK(chain.members[2].json() == "[0,[0,[0,[0,0,0],0]]]");
  CHECK(chain.members[3].json() == "[0,[0,[0,[0,[0,0],0]]]]");
  CHECK(chain.members[4].json() == "[0,[0,[0,[0,[0,0,0]]]]]");
  CHECK(chain.members[5].json() == "[0,[0,[0,[0,[0,[0,0]]]]]]");
  CHECK(chain.dims() == std::vector<int>{3, 2, 2, 1, 1, 0});
  CHECK(chain.members[2] == assoc::graft(assoc::t_max(3), 2, assoc::thuja(5)));
}

TEST_CASE("thuja chain edges and validity") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(assoc::thuja_chain(n, 1).members[0] == assoc::thuja(n));
    for (int k = 1; k <= n - 1; ++k) {
      const auto chain = assoc::thuja_chain(n, k);  // construction validates
      for (size_t i = 0; i + 1 < chain.members.size(); ++i)
        CHECK(assoc::tree_face_leq(chain.members[i], chain.members[i + 1]));
      for (int l = 1; l <= k; ++l) CHECK(chain.members[l - 1].dim() == (n - l) / 2);
    }
  }
  CHECK_THROWS_AS(assoc::thuja_chain(7, 7), std::invalid_argument);
  CHECK_THROWS_AS(assoc::thuja_chain(7, 0), std::invalid_argument);
}

TEST_CASE("consecutive thuja members meet at a shared vertex") {
  for (int n = 3; n <= 12; ++n) {
    const auto chain = assoc::thuja_chain(n, n - 1);
    for (size_t i = 0; i + 1 < chain.members.size(); ++i) {
      const auto top = assoc::tree_face_extremes(chain.members[i]).second;
      const auto bottom = assoc::tree_face_extremes(chain.members[i + 1]).first;
      CHECK(top == bottom);
    }
  }
}

TEST_CASE("leaning counts") {
  for (int n = 3; n <= 8; ++n) {
    const auto left = assoc::tree_face_extremes(
                          nd(std::vector<PlanarTree>(static_cast<size_t>(n), lf())))
                          .first;
    const auto lc_left = assoc::leaning_counts(left);
    CHECK(lc_left.up == n - 2);
    CHECK(lc_left.down == 0);
    const auto lc_right = assoc::leaning_counts(assoc::t_max(n));
    CHECK(lc_right.down == n - 2);
    CHECK(lc_right.up == 0);
    for (const PlanarTree& t : assoc::all_binary_trees(n)) {
      const auto lc = assoc::leaning_counts(t);
      CHECK(lc.down + lc.up == n - 2);
    }
  }
  CHECK_THROWS_AS(assoc::leaning_counts(nd({lf(), lf(), lf()})), std::invalid_argument);
}

TEST_CASE("length 2 chains in small associahedra have positive excess") {
  for (int n = 3; n <= 6; ++n) {
    const auto rep = assoc::two_short_check(n);
    CHECK(rep.pass);
    CHECK(rep.face_pairs_checked > 0);
  }
}

TEST_CASE("thuja excess formula agrees with the constructed chain") {
  CHECK(assoc::thuja_excess(7, 3) == 0);
  CHECK(assoc::thuja_excess(7, 1) == 2);  // codimension of a dim-3 face in dim 5
  CHECK(assoc::thuja_excess(21, 3) == -7);
  for (int n = 2; n <= 25; ++n)
    for (int k = 1; k <= std::min(n - 1, 6); ++k) CHECK_NOTHROW(assoc::thuja_excess(n, k));
  CHECK_THROWS_AS(assoc::thuja_excess(7, 7), std::invalid_argument);
}

TEST_CASE("associahedron polytope construction") {
  CHECK(assoc::associahedron_polytope(2).face_count() == 1);
  CHECK(assoc::associahedron_polytope(4).face_count() == 11);
  CHECK(assoc::associahedron_polytope(5).face_count() == 45);
  CHECK(assoc::associahedron_polytope(5).ambient_dim == 3);
  CHECK_THROWS_AS(assoc::associahedron_polytope(10), ResourceLimitError);
  CHECK_THROWS_AS(assoc::associahedron_polytope(1), std::invalid_argument);
}

TEST_CASE("tree containment is interval inclusion") {
  const auto p = assoc::associahedron_polytope(4);
  // the corolla (dim 2) contains everything
  int top = -1;
  for (int f = 0; f < p.face_count(); ++f)
    if (p.faces[f].dim == p.ambient_dim) top = f;
  for (int f = 0; f < p.face_count(); ++f) {
    CHECK(p.contains(top, f));
    CHECK(p.contains(f, f));
  }
  // [[0,0],0,0] contains [[0,0],[0,0]] but not [0,[0,0],0]
  int coarse = -1, fine_yes = -1, fine_no = -1;
  for (int f = 0; f < p.face_count(); ++f) {
    if (p.faces[f].json == "[[0,0],0,0]") coarse = f;
    if (p.faces[f].json == "[[0,0],[0,0]]") fine_yes = f;
    if (p.faces[f].json == "[0,[0,0],0]") fine_no = f;
  }
  REQUIRE(coarse >= 0);
  REQUIRE(fine_yes >= 0);
  REQUIRE(fine_no >= 0);
  CHECK(p.contains(coarse, fine_yes));
  CHECK_FALSE(p.contains(coarse, fine_no));
  CHECK_FALSE(p.contains(fine_yes, coarse));
}
