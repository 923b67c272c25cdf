#include <algorithm>

#include "doctest.h"
#include "qtc/errors.hpp"
#include "qtc/generate.hpp"
#include "qtc/oracle.hpp"
#include "support/naive.hpp"
#include "support/trees.hpp"

using namespace qtc;
using namespace qtc::testing;

namespace {

// C5: chromatic number 3 but clique number 2, so the decision for k=2 has to
// exhaust the search space.
AdjacencyGraph pentagon() {
  std::vector<SquareKey> vertices;
  for (std::uint32_t i = 0; i < 5; ++i) vertices.push_back({3, i, 0});
  return AdjacencyGraph(vertices, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}},
                        AdjacencyMode::edge);
}

}  // namespace

TEST_CASE("degeneracy_order") {
  const AdjacencyGraph k4 = build_graph(depth1_tree(), AdjacencyMode::corner);
  CHECK(degeneracy_order(k4).degeneracy == 3);

  SUBCASE("corner graphs of all small trees have degeneracy <= 5") {
    for (const Quadtree& t : enumerate_trees(5)) {
      const AdjacencyGraph g = build_graph(t, AdjacencyMode::corner);
      CHECK(degeneracy_order(g).degeneracy <= 5);
    }
  }
  SUBCASE("edge graphs of all small trees have degeneracy <= 5") {
    for (const Quadtree& t : enumerate_trees(4)) {
      const AdjacencyGraph g = build_graph(t, AdjacencyMode::edge);
      CHECK(degeneracy_order(g).degeneracy <= 5);
    }
  }
}

TEST_CASE("is_k_colorable decides exactly") {
  const AdjacencyGraph c4 = build_graph(depth1_tree(), AdjacencyMode::edge);
  CHECK(is_k_colorable(c4, 2).status == Feasibility::yes);

  const AdjacencyGraph k4 = build_graph(depth1_tree(), AdjacencyMode::corner);
  CHECK(is_k_colorable(k4, 3).status == Feasibility::no);
  CHECK(is_k_colorable(k4, 4).status == Feasibility::yes);

  const AdjacencyGraph t3 = build_graph(t3_tree(), AdjacencyMode::edge);
  CHECK(is_k_colorable(t3, 2).status == Feasibility::no);
  CHECK(naive_k_colorable(t3, 2) == false);
  CHECK(exhaustive_k_colorable(t3, 2) == false);
  const KColorResult three = is_k_colorable(t3, 3);
  CHECK(three.status == Feasibility::yes);
  CHECK(naive_k_colorable(t3, 3));
  CHECK(exhaustive_k_colorable(t3, 3));

  SUBCASE("a yes answer carries a proper assignment") {
    Coloring c{t3.vertices(), three.assignment, AdjacencyMode::edge, 3};
    CHECK(verify(t3_tree(), c, AdjacencyMode::edge).proper());
  }
}

TEST_CASE("budget exhaustion is a distinct outcome, not a no") {
  const AdjacencyGraph g = pentagon();
  SearchBudget tiny;
  tiny.max_oracle_nodes = 1;
  CHECK(is_k_colorable(g, 2, tiny).status == Feasibility::unknown);
  CHECK(is_k_colorable(g, 2).status == Feasibility::no);
  CHECK_THROWS_AS(chromatic_number(g, tiny), BudgetExceededError);
  CHECK(chromatic_number(g) == 3);
}

TEST_CASE("chromatic_number") {
  CHECK(chromatic_number(build_graph(make_root_tree(), AdjacencyMode::edge)) ==
        1);
  CHECK(chromatic_number(build_graph(depth1_tree(), AdjacencyMode::corner)) ==
        4);
  CHECK(chromatic_number(build_graph(t3_tree(), AdjacencyMode::edge)) == 3);

  SUBCASE("bounds sanity on random graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      RandomCfg cfg;
      cfg.seed = seed + 17;
      cfg.max_depth = 4;
      cfg.split_prob = {1, 2};
      cfg.balanced = (seed % 2) == 0;
      const Quadtree t = generate_random(cfg);
      if (t.leaf_count() > 60) continue;
      for (AdjacencyMode mode : {AdjacencyMode::edge, AdjacencyMode::corner}) {
        const AdjacencyGraph g = build_graph(t, mode);
        const int chi = chromatic_number(g);
        CHECK(chi <= degeneracy_order(g).degeneracy + 1);
        if (mode == AdjacencyMode::edge) {
          CHECK(chi <= 4);
          if (cfg.balanced) CHECK(chi <= 3);
        } else {
          CHECK(chi <= 6);
        }
      }
    }
  }
  SUBCASE("matches full enumeration over all assignments on tiny graphs") {
    for (const Quadtree& t : enumerate_trees(3)) {
      for (AdjacencyMode mode : {AdjacencyMode::edge, AdjacencyMode::corner}) {
        const AdjacencyGraph g = build_graph(t, mode);
        const int chi = chromatic_number(g);
        CHECK(exhaustive_k_colorable(g, chi));
        if (chi > 1) CHECK_FALSE(exhaustive_k_colorable(g, chi - 1));
      }
    }
  }
}

TEST_CASE("find_witness locates a 3-chromatic edge tree exhaustively") {
  WitnessGen gen;
  gen.exhaustive_splits = 2;
  SearchBudget budget;
  budget.max_candidates = 500;

  const WitnessReport r =
      find_witness(AdjacencyMode::edge, 3, false, gen, budget);
  REQUIRE(r.found);
  REQUIRE(r.tree.has_value());
  REQUIRE(r.certificate.has_value());
  CHECK(r.chi == 3);
  CHECK(r.k_minus_1_exhausted);
  // Two-split trees are the smallest with an odd cycle; the exhaustive phase
  // scans root (chi 1) and the single-split tree (chi 2) first.
  CHECK(r.tree->leaf_count() == 7);
  CHECK(verify(*r.tree, *r.certificate, AdjacencyMode::edge).proper());
  CHECK(r.certificate->palette_size == 3);

  SUBCASE("deterministic across runs and execution policies") {
    const WitnessReport r2 =
        find_witness(AdjacencyMode::edge, 3, false, gen, budget);
    const WitnessReport r3 =
        find_witness(AdjacencyMode::edge, 3, false, gen, budget, Exec::seq);
    for (const WitnessReport* other : {&r2, &r3}) {
      CHECK(other->found == r.found);
      CHECK(other->candidates_tried == r.candidates_tried);
      CHECK(other->tree->leaves() == r.tree->leaves());
      CHECK(other->certificate->colors == r.certificate->colors);
    }
  }
}

TEST_CASE("find_witness reports best certified chi when the target is out") {
  WitnessGen gen;
  gen.exhaustive_splits = 2;
  gen.max_random_depth = 4;
  gen.random_per_depth = 50;
  SearchBudget budget;
  budget.max_candidates = 120;

  const WitnessReport r =
      find_witness(AdjacencyMode::corner, 7, false, gen, budget);
  CHECK_FALSE(r.found);
  CHECK(r.candidates_tried == 120);
  REQUIRE(r.tree.has_value());
  CHECK(r.chi >= 4);  // any tree with one split has a K4 corner graph
  CHECK(r.chi <= 6);
  CHECK(verify(*r.tree, *r.certificate, AdjacencyMode::corner).proper());

  const WitnessReport r2 =
      find_witness(AdjacencyMode::corner, 7, false, gen, budget);
  CHECK(r2.chi == r.chi);
  CHECK(r2.tree->leaves() == r.tree->leaves());
}
