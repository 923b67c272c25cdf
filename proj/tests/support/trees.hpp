#pragma once

// Small fixture trees shared across test files.

#include "qtc/quadtree.hpp"

namespace qtc::testing {

// Four level-1 quadrants.
inline Quadtree depth1_tree() {
  return from_leaves({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}});
}

// Three level-1 quadrants plus the NE quadrant split once: 7 leaves,
// balanced.
inline Quadtree t3_tree() {
  return from_leaves(
      {{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {2, 2, 2}, {2, 3, 2}, {2, 2, 3}, {2, 3, 3}});
}

// t3 with its (2,2,2) leaf split again: a level-3 leaf then shares a boundary
// segment with the level-1 leaf (1,0,1) across x = 1/2, so 2:1 fails.
inline Quadtree t3_unbalanced_tree() {
  return split_leaf(t3_tree(), {2, 2, 2});
}

// Full 4x4 grid (depth 2 everywhere).
inline Quadtree grid16_tree() {
  std::vector<SquareKey> keys;
  for (std::uint32_t x = 0; x < 4; ++x) {
    for (std::uint32_t y = 0; y < 4; ++y) keys.push_back({2, x, y});
  }
  return from_leaves(std::move(keys));
}

}  // namespace qtc::testing
