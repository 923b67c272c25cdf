#include "qtc/generate.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <vector>

#include "qtc/errors.hpp"

namespace qtc {

std::uint64_t node_draw(std::uint64_t seed, const SquareKey& key) {
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ull) ^ key.pack());
}

namespace {

// Exact comparison draw/2^64 < num/den without floating point.
bool below_threshold(std::uint64_t draw, const Rational& p) {
  return (unsigned __int128)draw * p.den < ((unsigned __int128)p.num << 64);
}

}  // namespace

Quadtree generate_random(const RandomCfg& cfg) {
  if (cfg.max_depth < 0 || cfg.max_depth > kMaxLevel) {
    throw DepthLimitError("max_depth must be in [0, " +
                          std::to_string(kMaxLevel) + "]");
  }
  if (cfg.split_prob.den == 0 || cfg.split_prob.num > cfg.split_prob.den) {
    throw FormatError("split_prob must be a rational in [0, 1]");
  }
  std::vector<SquareKey> out;
  std::vector<SquareKey> stack{SquareKey{}};
  while (!stack.empty()) {
    const SquareKey k = stack.back();
    stack.pop_back();
    if (k.level < cfg.max_depth &&
        below_threshold(node_draw(cfg.seed, k), cfg.split_prob)) {
      for (const SquareKey& c : k.children()) stack.push_back(c);
    } else {
      out.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  Quadtree t = Quadtree::from_sorted_unchecked(std::move(out));
  return cfg.balanced ? balance(t) : t;
}

Quadtree generate_approx_size(std::size_t target_leaves, std::uint64_t seed) {
  if (target_leaves == 0) target_leaves = 1;
  // Full grid one level short of the target, then seeded extra splits
  // (3 extra leaves each) until the count is reached.
  int d = 0;
  while (d < kMaxLevel && (std::size_t(1) << (2 * (d + 1))) <= target_leaves) {
    ++d;
  }
  const std::uint32_t grid = 1u << d;
  std::vector<SquareKey> keys;
  keys.reserve(target_leaves + 3);
  for (std::uint32_t x = 0; x < grid; ++x) {
    for (std::uint32_t y = 0; y < grid; ++y) keys.push_back({d, x, y});
  }
  const std::size_t base = keys.size();
  std::size_t need =
      target_leaves > base ? (target_leaves - base + 2) / 3 : 0;
  need = std::min(need, base);
  if (need > 0) {
    // Seeded order over the grid cells; split the first `need` of them.
    std::vector<std::uint32_t> idx(base);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
      const std::uint64_t ha = node_draw(seed, keys[a]);
      const std::uint64_t hb = node_draw(seed, keys[b]);
      return ha != hb ? ha < hb : a < b;
    });
    for (std::size_t i = 0; i < need; ++i) {
      const SquareKey k = keys[idx[i]];
      keys[idx[i]] = k.children()[0];
      for (int c = 1; c < 4; ++c) keys.push_back(k.children()[c]);
    }
  }
  std::sort(keys.begin(), keys.end());
  return Quadtree::from_sorted_unchecked(std::move(keys));
}

}  // namespace qtc
