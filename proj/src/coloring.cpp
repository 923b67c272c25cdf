#include "qtc/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "qtc/detail/elimination.hpp"
#include "qtc/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qtc {

int Coloring::color_of(const SquareKey& key) const {
  auto it = std::lower_bound(keys.begin(), keys.end(), key);
  if (it == keys.end() || *it != key) {
    throw MissingAssignmentError("no color for " + key.str());
  }
  return colors[std::size_t(it - keys.begin())];
}

int pattern_color(const SquareKey& key) {
  const std::uint64_t x = key.x, y = key.y;
  return int((key.level & 1) ? (2 * x + y) % 3 : (x + 2 * y) % 3);
}

Coloring color_balanced_3(const Quadtree& tree, Exec exec) {
  if (!is_balanced(tree, exec)) {
    throw UnbalancedInputError("color_balanced_3 requires a 2:1 balanced tree");
  }
  const auto& leaves = tree.leaves();
  const std::int64_t n = std::int64_t(leaves.size());
  std::vector<int> colors(leaves.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) if (exec == Exec::par && n > 8192)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    colors[std::size_t(i)] = pattern_color(leaves[std::size_t(i)]);
  }
  int palette = 0;
  for (int c : colors) palette = std::max(palette, c + 1);
  return {leaves, std::move(colors), AdjacencyMode::edge, palette};
}

namespace {

using ColorMap = std::unordered_map<std::uint64_t, int, PackedKeyHash>;

int find_up_color(const ColorMap& state, SquareKey cell) {
  for (;;) {
    auto it = state.find(cell.pack());
    if (it != state.end()) return it->second;
    if (cell.level == 0) return -1;
    cell = cell.parent();
  }
}

// Debug-mode helper: materialize the intermediate tree and re-verify it.
void check_intermediate(const ColorMap& state) {
  std::vector<SquareKey> keys;
  std::vector<int> colors;
  keys.reserve(state.size());
  for (const auto& [packed, color] : state) {
    keys.push_back(SquareKey::unpack(packed));
    colors.push_back(color);
  }
  std::vector<std::uint32_t> idx(keys.size());
  for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::uint32_t a, std::uint32_t b) { return keys[a] < keys[b]; });
  Coloring c;
  c.mode = AdjacencyMode::edge;
  for (std::uint32_t i : idx) {
    c.keys.push_back(keys[i]);
    c.colors.push_back(colors[i]);
    c.palette_size = std::max(c.palette_size, colors[i] + 1);
  }
  const Quadtree t = Quadtree::from_sorted_unchecked(c.keys);
  if (!verify(t, c, AdjacencyMode::edge, Exec::seq).proper()) {
    throw InternalInvariantError(
        "intermediate coloring improper during split replay");
  }
}

}  // namespace

Coloring color_edge_4(const Quadtree& tree, Edge4Options opt) {
  // Internal nodes of the final tree, i.e. every ancestor of a leaf.
  std::unordered_map<std::uint64_t, char, PackedKeyHash> seen;
  for (const SquareKey& leaf : tree.leaves()) {
    SquareKey k = leaf;
    while (k.level > 0) {
      k = k.parent();
      if (!seen.emplace(k.pack(), 1).second) break;
    }
  }
  std::vector<SquareKey> splits;
  splits.reserve(seen.size());
  for (const auto& [packed, _] : seen) splits.push_back(SquareKey::unpack(packed));
  // Level-major canonical order realizes "always split a largest square".
  std::sort(splits.begin(), splits.end());

  ColorMap state(tree.leaf_count() * 2);
  state.emplace(SquareKey{}.pack(), 0);

  for (const SquareKey& s : splits) {
    const auto it = state.find(s.pack());
    assert(it != state.end() && "split schedule must follow tree order");
    const int parent_color = it->second;
    state.erase(it);

    const auto kids = s.children();
    const SquareKey ll = kids[0], nw = kids[1], se = kids[2], ne = kids[3];
    state.emplace(ll.pack(), parent_color);
    state.emplace(ne.pack(), parent_color);

    // The two remaining children see at most four neighbors, two of which
    // (their siblings) share the parent color, so a color is always free.
    for (const SquareKey& child : {nw, se}) {
      const std::uint32_t grid = 1u << child.level;
      unsigned used = 0;
      const std::int64_t cx = child.x, cy = child.y;
      const std::int64_t dirs[4][2] = {
          {cx - 1, cy}, {cx + 1, cy}, {cx, cy - 1}, {cx, cy + 1}};
      for (const auto& d : dirs) {
        if (d[0] < 0 || d[1] < 0 || d[0] >= grid || d[1] >= grid) continue;
        const int c = find_up_color(
            state, {child.level, std::uint32_t(d[0]), std::uint32_t(d[1])});
        if (c >= 0) used |= 1u << c;
      }
      if ((used & 0xFu) == 0xFu) {
        throw InternalInvariantError("child " + child.str() +
                                     " sees four distinct neighbor colors");
      }
      int pick = 0;
      while (used & (1u << pick)) ++pick;
      state.emplace(child.pack(), pick);
    }
    if (opt.check_each_step) check_intermediate(state);
  }

  const auto& leaves = tree.leaves();
  Coloring out;
  out.keys = leaves;
  out.colors.resize(leaves.size());
  out.mode = AdjacencyMode::edge;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const auto it = state.find(leaves[i].pack());
    assert(it != state.end());
    out.colors[i] = it->second;
    out.palette_size = std::max(out.palette_size, it->second + 1);
  }
  return out;
}

Coloring greedy_degenerate_color(const AdjacencyGraph& g, int degree_bound) {
  const auto elim = detail::min_degree_elimination(g, degree_bound);
  const std::uint32_t n = std::uint32_t(g.vertex_count());
  std::vector<int> colors(n, -1);
  int palette = 0;
  // Reinsert in reverse removal order; each vertex has at most `bound`
  // already-colored neighbors, so ids stay within bound + 1.
  for (auto it = elim.order.rbegin(); it != elim.order.rend(); ++it) {
    const std::uint32_t v = *it;
    unsigned used = 0;
    for (std::uint32_t u : g.neighbors(v)) {
      if (colors[u] >= 0) used |= 1u << colors[u];
    }
    int pick = 0;
    while (used & (1u << pick)) ++pick;
    colors[v] = pick;
    palette = std::max(palette, pick + 1);
  }
  return {g.vertices(), std::move(colors), g.mode(), palette};
}

Coloring color_corner_6(const Quadtree& tree, Exec exec) {
  const AdjacencyGraph g = build_graph(tree, AdjacencyMode::corner, exec);
  return greedy_degenerate_color(g, 5);
}

ViolationReport verify(const Quadtree& tree, const Coloring& c,
                       AdjacencyMode mode, Exec exec) {
  const auto& leaves = tree.leaves();
  // Colors against the canonical leaf order; throws on any missing leaf.
  std::vector<int> colors(leaves.size());
  if (c.keys == leaves) {
    colors = c.colors;
  } else {
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      colors[i] = c.color_of(leaves[i]);
    }
  }

  const AdjacencyGraph g = build_graph(tree, mode, exec);
  const std::uint32_t n = std::uint32_t(leaves.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bad;
#if defined(_OPENMP)
  if (exec == Exec::par && n > 8192) {
    const int nt = omp_get_max_threads();
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> local;
    local.resize(std::size_t(nt));
#pragma omp parallel num_threads(nt)
    {
      auto& mine = local[std::size_t(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::int64_t u = 0; u < std::int64_t(n); ++u) {
        for (std::uint32_t v : g.neighbors(std::uint32_t(u))) {
          if (std::uint32_t(u) < v && colors[std::size_t(u)] == colors[v]) {
            mine.emplace_back(std::uint32_t(u), v);
          }
        }
      }
    }
    for (auto& vec : local) bad.insert(bad.end(), vec.begin(), vec.end());
    std::sort(bad.begin(), bad.end());
  } else
#else
  (void)exec;
#endif
  {
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v : g.neighbors(u)) {
        if (u < v && colors[u] == colors[v]) bad.emplace_back(u, v);
      }
    }
  }

  ViolationReport report;
  report.violations.reserve(bad.size());
  for (const auto& [u, v] : bad) {
    report.violations.emplace_back(leaves[u], leaves[v]);
  }
  std::vector<char> present;
  for (int col : colors) {
    if (col >= 0) {
      if (std::size_t(col) >= present.size()) present.resize(col + 1, 0);
      present[std::size_t(col)] = 1;
    }
  }
  for (char p : present) report.colors_used += p;
  return report;
}

}  // namespace qtc
