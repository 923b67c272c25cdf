#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_set>

#include "qtc/detail/flat_table.hpp"
#include "qtc/errors.hpp"
#include "qtc/quadtree.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qtc {
namespace {

using KeySet = std::unordered_set<std::uint64_t, PackedKeyHash>;

// The four edge-adjacent cells of `k` at k's own level; count < 4 at the
// domain boundary.
int side_cells(const SquareKey& k, SquareKey out[4]) {
  const std::uint32_t grid = 1u << k.level;
  int n = 0;
  if (k.x > 0) out[n++] = {k.level, k.x - 1, k.y};
  if (k.x + 1 < grid) out[n++] = {k.level, k.x + 1, k.y};
  if (k.y > 0) out[n++] = {k.level, k.x, k.y - 1};
  if (k.y + 1 < grid) out[n++] = {k.level, k.x, k.y + 1};
  return n;
}

// Deepest leaf whose region contains `cell`, i.e. the ancestor-or-self of
// `cell` present in the leaf set. Returns false when the cell's region is
// subdivided into deeper leaves instead.
template <class Set>
bool find_up(const Set& leaves, SquareKey cell, SquareKey* out) {
  for (;;) {
    if (leaves.contains(cell.pack())) {
      *out = cell;
      return true;
    }
    if (cell.level == 0) return false;
    cell = cell.parent();
  }
}

// A leaf violates from its own side iff some edge neighbor is more than one
// level shallower. Pairs where the neighbor is deeper are caught from the
// deeper leaf's side.
template <class Set>
bool leaf_sees_violation(const Set& leaves, const SquareKey& k) {
  if (k.level < 2) return false;
  SquareKey cells[4];
  const int n = side_cells(k, cells);
  for (int i = 0; i < n; ++i) {
    SquareKey nb;
    if (find_up(leaves, cells[i], &nb) && k.level - nb.level > 1) return true;
  }
  return false;
}

}  // namespace

bool is_balanced(const Quadtree& tree, Exec exec) {
  const auto& leaves = tree.leaves();
  detail::FlatKeySet set(leaves.size());
  for (const SquareKey& k : leaves) set.insert(k.pack());

  bool violated = false;
#if defined(_OPENMP)
  if (exec == Exec::par && leaves.size() > 2048) {
#pragma omp parallel for schedule(static) reduction(|| : violated)
    for (std::int64_t i = 0; i < std::int64_t(leaves.size()); ++i) {
      violated = violated || leaf_sees_violation(set, leaves[i]);
    }
    return !violated;
  }
#else
  (void)exec;
#endif
  for (const SquareKey& k : leaves) {
    if (leaf_sees_violation(set, k)) return false;
  }
  return !violated;
}

Quadtree balance(const Quadtree& tree, int max_depth) {
  KeySet set(tree.leaf_count() * 2);
  std::deque<SquareKey> queue;
  for (const SquareKey& k : tree.leaves()) {
    set.insert(k.pack());
    queue.push_back(k);
  }

  while (!queue.empty()) {
    const SquareKey k = queue.front();
    queue.pop_front();
    if (!set.contains(k.pack())) continue;  // split since enqueued
    if (k.level < 2) continue;

    SquareKey cells[4];
    const int n = side_cells(k, cells);
    bool recheck = false;
    for (int i = 0; i < n; ++i) {
      SquareKey nb;
      if (!find_up(set, cells[i], &nb) || k.level - nb.level <= 1) continue;
      // Split the shallower square of the violating pair.
      if (nb.level >= max_depth) {
        throw DepthLimitError("balance refinement hit level " +
                              std::to_string(max_depth));
      }
      set.erase(nb.pack());
      for (const SquareKey& c : nb.children()) {
        set.insert(c.pack());
        queue.push_back(c);
      }
      recheck = true;
    }
    if (recheck) queue.push_back(k);
  }

  std::vector<SquareKey> keys;
  keys.reserve(set.size());
  for (std::uint64_t v : set) keys.push_back(SquareKey::unpack(v));
  std::sort(keys.begin(), keys.end());
  return Quadtree::from_sorted_unchecked(std::move(keys));
}

}  // namespace qtc
