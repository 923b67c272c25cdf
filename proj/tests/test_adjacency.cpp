#include <algorithm>

#include "doctest.h"
#include "qtc/adjacency.hpp"
#include "qtc/errors.hpp"
#include "qtc/generate.hpp"
#include "support/naive.hpp"
#include "support/trees.hpp"

using namespace qtc;
using namespace qtc::testing;

namespace {

bool same_graph(const AdjacencyGraph& a, const AdjacencyGraph& b) {
  return a.vertices() == b.vertices() && a.edge_pairs() == b.edge_pairs();
}

}  // namespace

TEST_CASE("are_adjacent distinguishes edge from corner contact") {
  // Diagonal quadrants touch at the center point only.
  CHECK_FALSE(are_adjacent({1, 0, 0}, {1, 1, 1}, AdjacencyMode::edge));
  CHECK(are_adjacent({1, 0, 0}, {1, 1, 1}, AdjacencyMode::corner));
  // Different sizes sharing a boundary segment of positive length.
  CHECK(are_adjacent({1, 0, 1}, {2, 2, 2}, AdjacencyMode::edge));
  // Full shared side.
  CHECK(are_adjacent({1, 0, 0}, {1, 1, 0}, AdjacencyMode::edge));
  CHECK(are_adjacent({1, 0, 0}, {1, 1, 0}, AdjacencyMode::corner));
  // Far apart.
  CHECK_FALSE(are_adjacent({2, 0, 0}, {2, 2, 0}, AdjacencyMode::edge));
  CHECK_FALSE(are_adjacent({2, 0, 0}, {2, 2, 0}, AdjacencyMode::corner));
  // A corner touching the interior of a larger square's side counts.
  CHECK(are_adjacent({1, 0, 0}, {2, 2, 2}, AdjacencyMode::corner));
  CHECK_FALSE(are_adjacent({1, 0, 0}, {2, 2, 2}, AdjacencyMode::edge));
  // Overlapping interiors are rejected.
  CHECK_THROWS_AS(are_adjacent({0, 0, 0}, {1, 0, 0}, AdjacencyMode::edge),
                  OverlapError);
}

TEST_CASE("build_graph on the depth-1 tree") {
  const Quadtree t = depth1_tree();
  SUBCASE("edge mode gives the 4-cycle") {
    const AdjacencyGraph g = build_graph(t, AdjacencyMode::edge);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    // Canonical vertex order: (1,0,0),(1,0,1),(1,1,0),(1,1,1); the two
    // diagonals 0-3 and 1-2 are the non-edges.
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(2, 3));
  }
  SUBCASE("corner mode gives K4") {
    const AdjacencyGraph g = build_graph(t, AdjacencyMode::corner);
    CHECK(g.edge_count() == 6);
  }
}

TEST_CASE("build_graph matches the quadratic oracle") {
  SUBCASE("t3 edge graph has 10 edges") {
    const AdjacencyGraph g = build_graph(t3_tree(), AdjacencyMode::edge);
    const AdjacencyGraph ref = naive_graph(t3_tree(), AdjacencyMode::edge);
    CHECK(g.edge_count() == 10);
    CHECK(same_graph(g, ref));
  }
  SUBCASE("random trees, both modes, seq and par") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      RandomCfg cfg;
      cfg.seed = seed;
      cfg.max_depth = 4;
      cfg.split_prob = {3, 5};
      cfg.balanced = (seed % 2) == 0;
      const Quadtree t = generate_random(cfg);
      if (t.leaf_count() > 200) continue;
      for (AdjacencyMode mode : {AdjacencyMode::edge, AdjacencyMode::corner}) {
        const AdjacencyGraph ref = naive_graph(t, mode);
        CHECK(same_graph(build_graph(t, mode, Exec::seq), ref));
        CHECK(same_graph(build_graph(t, mode, Exec::par), ref));
      }
    }
  }
  SUBCASE("deep unbalanced staircase") {
    // Repeatedly split the NE-most leaf: big/small contacts at many scales.
    Quadtree t = make_root_tree();
    SquareKey k{0, 0, 0};
    for (int i = 0; i < 6; ++i) {
      t = split_leaf(t, k);
      k = k.children()[3];
    }
    for (AdjacencyMode mode : {AdjacencyMode::edge, AdjacencyMode::corner}) {
      CHECK(same_graph(build_graph(t, mode), naive_graph(t, mode)));
    }
  }
}

TEST_CASE("edge adjacency implies corner adjacency") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    RandomCfg cfg;
    cfg.seed = seed;
    cfg.max_depth = 4;
    cfg.split_prob = {1, 2};
    const Quadtree t = generate_random(cfg);
    const AdjacencyGraph edge = build_graph(t, AdjacencyMode::edge);
    const AdjacencyGraph corner = build_graph(t, AdjacencyMode::corner);
    for (const auto& [u, v] : edge.edge_pairs()) {
      CHECK(corner.has_edge(u, v));
    }
  }
}

TEST_CASE("induced_subgraph restricts vertices and edges") {
  const AdjacencyGraph k4 = build_graph(depth1_tree(), AdjacencyMode::corner);
  SUBCASE("full subset is the identity") {
    CHECK(same_graph(induced_subgraph(k4, VertexSubset::all(4)), k4));
  }
  SUBCASE("singleton has no edges") {
    VertexSubset q(4);
    q.set(2);
    const AdjacencyGraph g = induced_subgraph(k4, q);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.vertex(0) == SquareKey{1, 1, 0});
  }
  SUBCASE("three of K4 form a triangle") {
    VertexSubset q(4);
    q.set(0);
    q.set(1);
    q.set(3);
    const AdjacencyGraph g = induced_subgraph(k4, q);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
  }
}

TEST_CASE("min_degree_vertex breaks ties canonically") {
  const AdjacencyGraph k4 = build_graph(depth1_tree(), AdjacencyMode::corner);
  CHECK(min_degree_vertex(k4, VertexSubset::all(4)) ==
        std::pair<std::uint32_t, std::uint32_t>{0, 3});

  const AdjacencyGraph c4 = build_graph(depth1_tree(), AdjacencyMode::edge);
  VertexSubset alive = VertexSubset::all(4);
  alive.reset(0);  // path 1-3-2
  const auto [v, d] = min_degree_vertex(c4, alive);
  CHECK(d == 1);
  CHECK(v == 1);  // endpoints are 1 and 2; canonical picks 1

  SUBCASE("degree agrees with the oracle graph") {
    const AdjacencyGraph g = build_graph(t3_tree(), AdjacencyMode::edge);
    const AdjacencyGraph ref = naive_graph(t3_tree(), AdjacencyMode::edge);
    const auto [u, deg] = min_degree_vertex(g, VertexSubset::all(7));
    CHECK(deg == ref.degree(u));
  }
  SUBCASE("empty subset throws") {
    CHECK_THROWS_AS(min_degree_vertex(c4, VertexSubset(4)), EmptySubsetError);
  }
}

TEST_CASE("sampled corner subsets always contain a degree-<=5 vertex") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    RandomCfg cfg;
    cfg.seed = seed * 31 + 5;
    cfg.max_depth = 5;
    cfg.split_prob = {3, 5};
    const Quadtree t = generate_random(cfg);
    const AdjacencyGraph corner = build_graph(t, AdjacencyMode::corner);
    const VertexSubset q = random_subset(corner.vertex_count(), seed);
    const AdjacencyGraph sub = induced_subgraph(corner, q);
    if (sub.vertex_count() == 0) continue;
    const auto [v, d] = min_degree_vertex(sub, VertexSubset::all(sub.vertex_count()));
    CHECK(d <= 5);
  }
}
