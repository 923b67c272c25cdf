#include "qtc/quadtree.hpp"

#include <algorithm>
#include <cassert>
#include <span>

#include "qtc/errors.hpp"

namespace qtc {
namespace {

struct PathEntry {
  std::uint64_t path;
  int level;
  std::uint32_t idx;  // position in the caller's vector
};

// Recursive walk over the path-sorted entries to locate an uncovered cell.
// Precondition: entries form an antichain of strict descendants of `node`
// whose total area falls short of node's area.
SquareKey find_uncovered(const SquareKey& node,
                         std::span<const PathEntry> range) {
  if (range.empty()) return node;
  const auto kids = node.children();
  // children() is canonical (SW, NW, SE, NE) but path digits order as
  // (SW, SE, NW, NE); map digit -> child.
  const int digit_to_child[4] = {0, 2, 1, 3};
  // Entries are contiguous per 2-bit path digit because they are path-sorted.
  std::size_t begin = 0;
  for (int digit = 0; digit < 4; ++digit) {
    std::size_t end = begin;
    while (end < range.size() &&
           int((range[end].path >> (62 - 2 * node.level)) & 3u) == digit) {
      ++end;
    }
    const SquareKey child = kids[digit_to_child[digit]];
    const std::uint64_t need = std::uint64_t(1)
                               << (2 * (kMaxLevel - child.level));
    std::uint64_t have = 0;
    for (std::size_t i = begin; i < end; ++i) {
      have += std::uint64_t(1) << (2 * (kMaxLevel - range[i].level));
      if (have >= need) break;
    }
    if (have < need) {
      if (begin == end) return child;
      return find_uncovered(child, range.subspan(begin, end - begin));
    }
    begin = end;
  }
  assert(false && "deficit vanished during descent");
  return node;
}

void validate_partition(const std::vector<SquareKey>& sorted_leaves) {
  if (sorted_leaves.empty()) {
    throw PartitionError("no leaves; unit square uncovered (witness (0,0,0))");
  }
  int depth = 0;
  for (const SquareKey& k : sorted_leaves) {
    if (!k.in_range()) {
      throw KeyRangeError("key " + k.str() + " outside the dyadic grid");
    }
    depth = std::max(depth, k.level);
  }

  std::vector<PathEntry> entries(sorted_leaves.size());
  for (std::uint32_t i = 0; i < sorted_leaves.size(); ++i) {
    entries[i] = {sorted_leaves[i].path_code(), sorted_leaves[i].level, i};
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.path != b.path ? a.path < b.path : a.level < b.level;
  });

  // Antichain: after path sort, an ancestor (or duplicate) of some key sits
  // immediately before a key it contains.
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    const auto& a = entries[i];
    const auto& b = entries[i + 1];
    const bool prefix =
        a.level <= b.level &&
        (a.level == 0 ||
         (a.path >> (64 - 2 * a.level)) == (b.path >> (64 - 2 * a.level)));
    if (prefix) {
      throw PartitionError("overlapping squares " +
                           sorted_leaves[a.idx].str() + " and " +
                           sorted_leaves[b.idx].str());
    }
  }

  // Exact area identity at the fixed scale 4^kMaxLevel. Disjointness is
  // already established, so the sum can never exceed the target.
  const std::uint64_t target = std::uint64_t(1) << (2 * kMaxLevel);
  std::uint64_t sum = 0;
  for (const SquareKey& k : sorted_leaves) {
    sum += std::uint64_t(1) << (2 * (kMaxLevel - k.level));
  }
  if (sum != target) {
    assert(sum < target);
    const SquareKey witness = find_uncovered(SquareKey{}, entries);
    throw PartitionError("region " + witness.str() + " uncovered");
  }
}

}  // namespace

Quadtree Quadtree::from_sorted_unchecked(std::vector<SquareKey> keys) {
  Quadtree t;
  t.leaves_ = std::move(keys);
  t.depth_ = 0;
  for (const SquareKey& k : t.leaves_) t.depth_ = std::max(t.depth_, k.level);
  return t;
}

Quadtree Quadtree::from_leaves(std::vector<SquareKey> keys) {
  std::sort(keys.begin(), keys.end());
  validate_partition(keys);
  return from_sorted_unchecked(std::move(keys));
}

bool Quadtree::is_leaf(const SquareKey& key) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), key);
}

std::optional<std::uint32_t> Quadtree::index_of(const SquareKey& key) const {
  auto it = std::lower_bound(leaves_.begin(), leaves_.end(), key);
  if (it == leaves_.end() || *it != key) return std::nullopt;
  return std::uint32_t(it - leaves_.begin());
}

Quadtree make_root_tree() { return Quadtree{}; }

Quadtree from_leaves(std::vector<SquareKey> keys) {
  return Quadtree::from_leaves(std::move(keys));
}

Quadtree split_leaf(const Quadtree& tree, const SquareKey& key) {
  if (!tree.is_leaf(key)) {
    throw NotALeafError(key.str() + " is not a leaf of the tree");
  }
  if (key.level >= kMaxLevel) {
    throw DepthLimitError("cannot split below level " +
                          std::to_string(kMaxLevel));
  }
  std::vector<SquareKey> keys = tree.leaves();
  keys.erase(std::lower_bound(keys.begin(), keys.end(), key));
  for (const SquareKey& c : key.children()) keys.push_back(c);
  std::sort(keys.begin(), keys.end());
  return Quadtree::from_sorted_unchecked(std::move(keys));
}

}  // namespace qtc
