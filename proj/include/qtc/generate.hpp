#pragma once

#include <cstdint>
#include <vector>

#include "qtc/quadtree.hpp"
#include "qtc/square_key.hpp"

namespace qtc {

// Exact split probability num/den. Kept rational so the split decision is an
// integer comparison, never floating point.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

struct RandomCfg {
  std::uint64_t seed = 0;
  int max_depth = 6;
  Rational split_prob{1, 2};
  bool balanced = false;
};

// Per-node draw: a pure function of (seed, key), so the tree is identical no
// matter in which order nodes are visited. Exposed for tests.
std::uint64_t node_draw(std::uint64_t seed, const SquareKey& key);

// Recursive seeded splitting: every node above max_depth splits with
// probability split_prob; cfg.balanced post-processes with balance().
Quadtree generate_random(const RandomCfg& cfg);

// Deterministic tree of roughly `target_leaves` leaves for benchmarks: a full
// grid one level short of the target, then seeded extra splits until the
// count is reached. The result is 2:1 balanced.
Quadtree generate_approx_size(std::size_t target_leaves, std::uint64_t seed);

// Every distinct quadtree reachable with at most max_splits splits, exactly
// once, sorted lexicographically by leaf sequence. Throws BudgetExceeded when
// the count would pass `cap`.
std::vector<Quadtree> enumerate_trees(int max_splits,
                                      std::uint64_t cap = 2'000'000);

// Number of distinct quadtrees with exactly `splits` splits (Fuss-Catalan).
std::uint64_t tree_count_exact(int splits);

}  // namespace qtc
