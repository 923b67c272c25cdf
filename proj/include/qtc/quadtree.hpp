#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qtc/exec.hpp"
#include "qtc/square_key.hpp"

namespace qtc {

// A quadtree given by its leaf squares, which form an exact partition of the
// unit square. Leaves are kept in canonical (level, x, y) order; the value is
// immutable after construction.
class Quadtree {
 public:
  // Default tree is the single root leaf.
  Quadtree() : leaves_{SquareKey{}}, depth_(0) {}

  // Validates that `keys` is an exact partition. Throws KeyRangeError or
  // PartitionError (with an overlap or uncovered-region witness).
  static Quadtree from_leaves(std::vector<SquareKey> keys);

  const std::vector<SquareKey>& leaves() const { return leaves_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  int depth() const { return depth_; }

  bool is_leaf(const SquareKey& key) const;
  // Index in canonical order, or nullopt if not a leaf.
  std::optional<std::uint32_t> index_of(const SquareKey& key) const;

  friend bool operator==(const Quadtree& a, const Quadtree& b) {
    return a.leaves_ == b.leaves_;
  }

  // Trusted constructor for internal producers; input must be a sorted,
  // valid partition.
  static Quadtree from_sorted_unchecked(std::vector<SquareKey> keys);

 private:
  std::vector<SquareKey> leaves_;
  int depth_;
};

Quadtree make_root_tree();

Quadtree from_leaves(std::vector<SquareKey> keys);

// Replaces `key` by its four children. Throws NotALeaf.
Quadtree split_leaf(const Quadtree& tree, const SquareKey& key);

// True iff every edge-adjacent leaf pair differs by at most one level.
bool is_balanced(const Quadtree& tree, Exec exec = Exec::par);

// Minimal refinement of `tree` satisfying the 2:1 edge balance condition.
// Splits only ever go as deep as the existing depth; max_depth is a guard.
Quadtree balance(const Quadtree& tree, int max_depth = kMaxLevel);

}  // namespace qtc
