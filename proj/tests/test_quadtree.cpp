#include <set>
#include <vector>

#include "doctest.h"
#include "qtc/errors.hpp"
#include "qtc/generate.hpp"
#include "qtc/quadtree.hpp"
#include "support/naive.hpp"
#include "support/trees.hpp"

using namespace qtc;
using namespace qtc::testing;

TEST_CASE("root tree is the single root leaf") {
  const Quadtree t = make_root_tree();
  CHECK(t.leaf_count() == 1);
  CHECK(t.leaves()[0] == SquareKey{0, 0, 0});
  CHECK(t.depth() == 0);
  CHECK_NOTHROW(from_leaves(t.leaves()));  // exact-partition check passes
}

TEST_CASE("from_leaves validates exact partitions") {
  SUBCASE("one split is a valid depth-1 tree") {
    const Quadtree t = depth1_tree();
    CHECK(t.leaf_count() == 4);
    CHECK(t.depth() == 1);
  }
  SUBCASE("missing NE quadrant is uncovered") {
    CHECK_THROWS_AS(from_leaves({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}),
                    PartitionError);
    try {
      from_leaves({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}});
    } catch (const PartitionError& e) {
      CHECK(std::string(e.what()).find("(1,1,1)") != std::string::npos);
    }
  }
  SUBCASE("ancestor/descendant pair overlaps") {
    CHECK_THROWS_AS(from_leaves({{0, 0, 0}, {1, 0, 0}}), PartitionError);
  }
  SUBCASE("duplicate key overlaps") {
    CHECK_THROWS_AS(
        from_leaves({{1, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}}),
        PartitionError);
  }
  SUBCASE("coordinates outside the level grid") {
    CHECK_THROWS_AS(from_leaves({{1, 2, 0}}), KeyRangeError);
  }
  SUBCASE("empty leaf set") {
    CHECK_THROWS_AS(from_leaves({}), PartitionError);
  }
}

TEST_CASE("split_leaf replaces a leaf by its four children") {
  const Quadtree root = make_root_tree();
  const Quadtree d1 = split_leaf(root, {0, 0, 0});
  CHECK(d1 == depth1_tree());

  SUBCASE("coordinates double into the NE quadrant") {
    const Quadtree t = split_leaf(d1, {1, 1, 1});
    CHECK(t == t3_tree());
    CHECK(t.leaf_count() == 7);
  }
  SUBCASE("second split of the same key is NotALeaf") {
    const Quadtree t = split_leaf(d1, {1, 0, 0});
    CHECK_THROWS_AS(split_leaf(t, {1, 0, 0}), NotALeafError);
  }
  SUBCASE("split adds exactly three leaves and keeps the partition") {
    const Quadtree t = split_leaf(d1, {1, 0, 1});
    CHECK(t.leaf_count() == d1.leaf_count() + 3);
    CHECK_NOTHROW(from_leaves(t.leaves()));
  }
}

TEST_CASE("is_balanced agrees with the all-pairs predicate oracle") {
  CHECK(is_balanced(depth1_tree()));
  CHECK(is_balanced(t3_tree()));
  CHECK(naive_is_balanced(t3_tree()));
  CHECK_FALSE(is_balanced(t3_unbalanced_tree()));
  CHECK_FALSE(naive_is_balanced(t3_unbalanced_tree()));

  // Random trees, both verdicts identical.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomCfg cfg;
    cfg.seed = seed;
    cfg.max_depth = 4;
    cfg.split_prob = {3, 5};
    const Quadtree t = generate_random(cfg);
    CHECK(is_balanced(t) == naive_is_balanced(t));
    CHECK(is_balanced(t, Exec::seq) == naive_is_balanced(t));
  }
}

TEST_CASE("balance computes the minimal 2:1 refinement") {
  SUBCASE("fixpoints stay put") {
    CHECK(balance(make_root_tree()) == make_root_tree());
    CHECK(balance(t3_tree()) == t3_tree());
  }
  SUBCASE("unbalanced tree gets refined, never coarsened") {
    const Quadtree t = t3_unbalanced_tree();
    const Quadtree b = balance(t);
    CHECK(is_balanced(b));
    CHECK(naive_is_balanced(b));
    // Refinement only: every result leaf sits inside some original leaf, so
    // each original leaf is either still present or subdivided.
    for (const SquareKey& l : b.leaves()) {
      bool inside_original = false;
      for (const SquareKey& k : t.leaves()) {
        if (k.contains(l)) {
          inside_original = true;
          break;
        }
      }
      CHECK(inside_original);
    }
  }
  SUBCASE("idempotent") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      RandomCfg cfg;
      cfg.seed = seed;
      cfg.max_depth = 5;
      cfg.split_prob = {1, 2};
      const Quadtree b = balance(generate_random(cfg));
      CHECK(is_balanced(b));
      CHECK(balance(b) == b);
    }
  }
}

TEST_CASE("generate_random is deterministic in its config") {
  SUBCASE("split probability zero keeps the root") {
    RandomCfg cfg;
    cfg.split_prob = {0, 1};
    cfg.seed = 7;
    CHECK(generate_random(cfg) == make_root_tree());
  }
  SUBCASE("split probability one fills the grid") {
    RandomCfg cfg;
    cfg.split_prob = {1, 1};
    cfg.max_depth = 2;
    cfg.seed = 7;
    CHECK(generate_random(cfg) == grid16_tree());
  }
  SUBCASE("same config, same tree; balanced flag holds its postcondition") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      RandomCfg cfg;
      cfg.seed = seed;
      cfg.max_depth = 6;
      cfg.split_prob = {2, 3};
      cfg.balanced = true;
      const Quadtree a = generate_random(cfg);
      const Quadtree b = generate_random(cfg);
      CHECK(a == b);
      CHECK(is_balanced(a));
      CHECK_NOTHROW(from_leaves(a.leaves()));
    }
  }
}

TEST_CASE("generate_approx_size hits the leaf target") {
  for (std::size_t target : {1ul, 5ul, 100ul, 4096ul, 10000ul}) {
    const Quadtree t = generate_approx_size(target, 3);
    CHECK(t.leaf_count() >= target);
    CHECK(t.leaf_count() <= target + 2);
    CHECK(is_balanced(t));
  }
  CHECK(generate_approx_size(10000, 3) == generate_approx_size(10000, 3));
}

TEST_CASE("enumerate_trees yields each shape exactly once in stable order") {
  CHECK(enumerate_trees(0).size() == 1);
  CHECK(enumerate_trees(1).size() == 2);
  CHECK(enumerate_trees(2).size() == 6);

  // Counts per split level follow the 4-ary tree numbers.
  CHECK(tree_count_exact(0) == 1);
  CHECK(tree_count_exact(1) == 1);
  CHECK(tree_count_exact(2) == 4);
  CHECK(tree_count_exact(3) == 22);
  CHECK(tree_count_exact(4) == 140);
  CHECK(tree_count_exact(5) == 969);

  std::uint64_t cumulative = 0;
  for (int s = 0; s <= 5; ++s) cumulative += tree_count_exact(s);
  const auto trees = enumerate_trees(5);
  CHECK(trees.size() == cumulative);

  // No duplicates, everything valid, order strictly increasing.
  std::set<std::vector<SquareKey>> seen;
  for (const Quadtree& t : trees) {
    CHECK(seen.insert(t.leaves()).second);
    CHECK_NOTHROW(from_leaves(t.leaves()));
  }
  for (std::size_t i = 0; i + 1 < trees.size(); ++i) {
    CHECK(std::lexicographical_compare(
        trees[i].leaves().begin(), trees[i].leaves().end(),
        trees[i + 1].leaves().begin(), trees[i + 1].leaves().end()));
  }

  CHECK_THROWS_AS(enumerate_trees(4, 10), BudgetExceededError);
}
