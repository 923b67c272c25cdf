#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qtc/adjacency.hpp"
#include "qtc/exec.hpp"
#include "qtc/quadtree.hpp"

namespace qtc {

// Total color assignment over one tree's leaves, stored against the canonical
// leaf order.
struct Coloring {
  std::vector<SquareKey> keys;  // canonical order
  std::vector<int> colors;      // parallel to keys
  AdjacencyMode mode = AdjacencyMode::edge;
  int palette_size = 0;         // 1 + max color id used

  // Throws MissingAssignment.
  int color_of(const SquareKey& key) const;

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.keys == b.keys && a.colors == b.colors && a.mode == b.mode;
  }
};

struct ViolationReport {
  std::vector<std::pair<SquareKey, SquareKey>> violations;  // canonical pairs
  int colors_used = 0;
  bool proper() const { return violations.empty(); }
};

// Closed-form 3-color pattern: even level (x + 2y) mod 3, odd level
// (2x + y) mod 3. Same-level grid neighbors always differ, and every square
// gets the color of its lower-left child, so the pattern is stable under
// consolidation.
int pattern_color(const SquareKey& key);

// Per-leaf pattern fill; proper for EDGE mode on balanced trees, <= 3 colors.
// Throws UnbalancedInput.
Coloring color_balanced_3(const Quadtree& tree, Exec exec = Exec::par);

struct Edge4Options {
  // Re-verify the whole intermediate coloring after every split (debug;
  // quadratic, test-sized trees only).
  bool check_each_step = false;
};

// Largest-first split replay: upper-right and lower-left children inherit the
// parent color, the other two take the smallest color free among their edge
// neighbors. Proper for EDGE mode on any tree, <= 4 colors.
Coloring color_edge_4(const Quadtree& tree, Edge4Options opt = {});

// Min-degree elimination (degree buckets), then reinsertion with the smallest
// color unused among already-colored neighbors. Uses <= degree_bound + 1
// colors; throws DegeneracyExceeded if some remaining subgraph has minimum
// degree above the bound.
Coloring greedy_degenerate_color(const AdjacencyGraph& g, int degree_bound);

// greedy_degenerate_color over the corner graph with bound 5: proper for
// CORNER mode on any tree, <= 6 colors.
Coloring color_corner_6(const Quadtree& tree, Exec exec = Exec::par);

// Exhaustive list of same-colored adjacent pairs under `mode`.
// Throws MissingAssignment if `c` is not total on the leaves.
ViolationReport verify(const Quadtree& tree, const Coloring& c,
                       AdjacencyMode mode, Exec exec = Exec::par);

}  // namespace qtc
