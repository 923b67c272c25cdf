#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "qtc/errors.hpp"
#include "qtc/generate.hpp"

namespace qtc {
namespace {

// Shapes are 4-ary trees stored in an arena and shared across products:
// child[i] == -1 means leaf child. Index 0 is the single-leaf shape.
struct Shape {
  std::array<std::int32_t, 4> child;
};

struct ShapeTable {
  std::vector<Shape> arena;
  std::vector<std::vector<std::int32_t>> by_splits;  // shape ids per count

  explicit ShapeTable(int max_splits) {
    by_splits.resize(max_splits + 1);
    arena.push_back({{-1, -1, -1, -1}});  // unused placeholder for id 0
    by_splits[0].push_back(-1);           // -1 denotes the bare leaf
    for (int s = 1; s <= max_splits; ++s) grow(s);
  }

  void grow(int s) {
    // Root split consumes one; distribute s-1 over the four subtrees.
    for (int a = 0; a <= s - 1; ++a) {
      for (int b = 0; a + b <= s - 1; ++b) {
        for (int c = 0; a + b + c <= s - 1; ++c) {
          const int d = s - 1 - a - b - c;
          for (std::int32_t sa : by_splits[a]) {
            for (std::int32_t sb : by_splits[b]) {
              for (std::int32_t sc : by_splits[c]) {
                for (std::int32_t sd : by_splits[d]) {
                  arena.push_back({{sa, sb, sc, sd}});
                  by_splits[s].push_back(std::int32_t(arena.size() - 1));
                }
              }
            }
          }
        }
      }
    }
  }

  void instantiate(std::int32_t shape, const SquareKey& key,
                   std::vector<SquareKey>& out) const {
    if (shape < 0) {
      out.push_back(key);
      return;
    }
    const auto kids = key.children();
    for (int i = 0; i < 4; ++i) {
      instantiate(arena[std::size_t(shape)].child[i], kids[i], out);
    }
  }
};

}  // namespace

std::uint64_t tree_count_exact(int splits) {
  // a(s) = sum over root-child compositions; a(0) = 1.
  std::vector<std::uint64_t> a{1};
  for (int s = 1; s <= splits; ++s) {
    std::uint64_t total = 0;
    for (int i = 0; i <= s - 1; ++i) {
      for (int j = 0; i + j <= s - 1; ++j) {
        for (int k = 0; i + j + k <= s - 1; ++k) {
          total += a[i] * a[j] * a[k] * a[s - 1 - i - j - k];
        }
      }
    }
    a.push_back(total);
  }
  return a[splits];
}

std::vector<Quadtree> enumerate_trees(int max_splits, std::uint64_t cap) {
  if (max_splits < 0) max_splits = 0;
  std::uint64_t total = 0;
  for (int s = 0; s <= max_splits; ++s) {
    total += tree_count_exact(s);
    if (total > cap) {
      throw BudgetExceededError(
          "enumerate_trees(" + std::to_string(max_splits) + ") yields " +
          std::to_string(total) + "+ trees, cap " + std::to_string(cap));
    }
  }

  const ShapeTable table(max_splits);
  std::vector<Quadtree> out;
  out.reserve(total);
  for (int s = 0; s <= max_splits; ++s) {
    for (std::int32_t shape : table.by_splits[s]) {
      std::vector<SquareKey> keys;
      keys.reserve(1 + 3 * std::size_t(s));
      table.instantiate(shape, SquareKey{}, keys);
      std::sort(keys.begin(), keys.end());
      out.push_back(Quadtree::from_sorted_unchecked(std::move(keys)));
    }
  }
  std::sort(out.begin(), out.end(), [](const Quadtree& a, const Quadtree& b) {
    return std::lexicographical_compare(a.leaves().begin(), a.leaves().end(),
                                        b.leaves().begin(), b.leaves().end());
  });
  return out;
}

}  // namespace qtc
