#include "qtc/adjacency.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "qtc/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qtc {

int hardware_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::string to_string(AdjacencyMode mode) {
  return mode == AdjacencyMode::edge ? "edge" : "corner";
}

namespace {

struct Box {
  std::uint64_t x0, x1, y0, y1;  // at the common grid scale
};

Box scale_to(const SquareKey& k, int grid_level) {
  const int shift = grid_level - k.level;
  return {std::uint64_t(k.x) << shift, (std::uint64_t(k.x) + 1) << shift,
          std::uint64_t(k.y) << shift, (std::uint64_t(k.y) + 1) << shift};
}

}  // namespace

bool are_adjacent(const SquareKey& a, const SquareKey& b, AdjacencyMode mode) {
  const int g = std::max(a.level, b.level);
  const Box ba = scale_to(a, g);
  const Box bb = scale_to(b, g);
  const bool x_overlap = ba.x0 < bb.x1 && bb.x0 < ba.x1;  // positive length
  const bool y_overlap = ba.y0 < bb.y1 && bb.y0 < ba.y1;
  if (x_overlap && y_overlap) {
    throw OverlapError("squares " + a.str() + " and " + b.str() +
                       " have intersecting interiors");
  }
  const bool x_touch = ba.x0 <= bb.x1 && bb.x0 <= ba.x1;  // closed intervals
  const bool y_touch = ba.y0 <= bb.y1 && bb.y0 <= ba.y1;
  if (mode == AdjacencyMode::edge) {
    return (x_touch && y_overlap) || (y_touch && x_overlap);
  }
  return x_touch && y_touch;
}

AdjacencyGraph::AdjacencyGraph(
    std::vector<SquareKey> vertices,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
    AdjacencyMode mode)
    : vertices_(std::move(vertices)), mode_(mode) {
  const std::size_t n = vertices_.size();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    assert(u < v && v < n);
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  neighbors_.resize(offsets_[n]);
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted (u, v): per-vertex neighbor lists come out sorted.
  for (const auto& [u, v] : edges) {
    neighbors_[fill[u]++] = v;
    neighbors_[fill[v]++] = u;
  }
}

bool AdjacencyGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>>
AdjacencyGraph::edge_pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < vertex_count(); ++u) {
    for (std::uint32_t v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

using LeafIndex =
    std::unordered_map<std::uint64_t, std::uint32_t, PackedKeyHash>;

std::int64_t find_up(const LeafIndex& index, SquareKey cell) {
  for (;;) {
    auto it = index.find(cell.pack());
    if (it != index.end()) return it->second;
    if (cell.level == 0) return -1;
    cell = cell.parent();
  }
}

// Leaf touching the corner point from inside the diagonal cell `d`; descends
// toward the corner (dx, dy point back at it) when d is subdivided.
std::int64_t find_corner_leaf(const LeafIndex& index, SquareKey d, int depth,
                              int corner_dx, int corner_dy) {
  const std::int64_t up = find_up(index, d);
  if (up >= 0) return up;
  SquareKey cur = d;
  while (cur.level < depth) {
    // Child hugging the corner: SW child when the corner is our SW corner.
    cur = {cur.level + 1, 2 * cur.x + (corner_dx < 0 ? 1u : 0u),
           2 * cur.y + (corner_dy < 0 ? 1u : 0u)};
    auto it = index.find(cur.pack());
    if (it != index.end()) return it->second;
  }
  return -1;
}

using EdgeVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// All pairs (i, j) discovered from leaf i's sides and corners. Same-size side
// pairs are emitted from the west/south square only; pairs with a larger
// neighbor are emitted from the smaller square; corner contacts may be
// emitted from both ends and are deduplicated later.
void discover(const Quadtree& tree, const LeafIndex& index, AdjacencyMode mode,
              std::uint32_t i, EdgeVec& out) {
  const SquareKey k = tree.leaves()[i];
  const std::uint32_t grid = 1u << k.level;

  const auto add = [&](std::int64_t j) {
    if (j >= 0 && std::uint32_t(j) != i) {
      out.emplace_back(std::min(i, std::uint32_t(j)),
                       std::max(i, std::uint32_t(j)));
    }
  };

  struct Side {
    bool ok;
    SquareKey cell;
    bool emit_same;  // east/north sides own the same-level pair
  };
  const Side sides[4] = {
      {k.x > 0, {k.level, k.x - 1, k.y}, false},
      {k.x + 1 < grid, {k.level, k.x + 1, k.y}, true},
      {k.y > 0, {k.level, k.x, k.y - 1}, false},
      {k.y + 1 < grid, {k.level, k.x, k.y + 1}, true},
  };
  for (const Side& s : sides) {
    if (!s.ok) continue;
    const std::int64_t j = find_up(index, s.cell);
    if (j < 0) continue;  // subdivided; deeper leaves discover the pairs
    const int nb_level = tree.leaves()[std::size_t(j)].level;
    if (nb_level < k.level || s.emit_same) add(j);
  }

  if (mode == AdjacencyMode::corner) {
    const int dirs[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    for (const auto& d : dirs) {
      const std::int64_t cx = std::int64_t(k.x) + d[0];
      const std::int64_t cy = std::int64_t(k.y) + d[1];
      if (cx < 0 || cy < 0 || cx >= grid || cy >= grid) continue;
      const SquareKey diag{k.level, std::uint32_t(cx), std::uint32_t(cy)};
      add(find_corner_leaf(index, diag, tree.depth(), d[0], d[1]));
    }
  }
}

}  // namespace

AdjacencyGraph build_graph(const Quadtree& tree, AdjacencyMode mode,
                           Exec exec) {
  const auto& leaves = tree.leaves();
  const std::uint32_t n = std::uint32_t(leaves.size());
  LeafIndex index(n * 2);
  for (std::uint32_t i = 0; i < n; ++i) index.emplace(leaves[i].pack(), i);

  EdgeVec pairs;
#if defined(_OPENMP)
  if (exec == Exec::par && n > 4096) {
    const int nt = omp_get_max_threads();
    std::vector<EdgeVec> local(nt);
#pragma omp parallel num_threads(nt)
    {
      EdgeVec& mine = local[std::size_t(omp_get_thread_num())];
      mine.reserve(std::size_t(n) * 6 / std::size_t(nt) + 16);
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < std::int64_t(n); ++i) {
        discover(tree, index, mode, std::uint32_t(i), mine);
      }
    }
    std::size_t total = 0;
    for (const auto& v : local) total += v.size();
    pairs.reserve(total);
    for (auto& v : local) {
      pairs.insert(pairs.end(), v.begin(), v.end());
    }
  } else
#else
  (void)exec;
#endif
  {
    pairs.reserve(std::size_t(n) * 6);
    for (std::uint32_t i = 0; i < n; ++i) discover(tree, index, mode, i, pairs);
  }

  return AdjacencyGraph(leaves, std::move(pairs), mode);
}

std::size_t VertexSubset::count() const {
  std::size_t c = 0;
  for (unsigned char b : bits_) c += b;
  return c;
}

AdjacencyGraph induced_subgraph(const AdjacencyGraph& g,
                                const VertexSubset& q) {
  assert(q.size() == g.vertex_count());
  const std::uint32_t n = std::uint32_t(g.vertex_count());
  std::vector<std::uint32_t> remap(n, 0);
  std::vector<SquareKey> vertices;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (q.test(i)) {
      remap[i] = std::uint32_t(vertices.size());
      vertices.push_back(g.vertex(i));
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    if (!q.test(u)) continue;
    for (std::uint32_t v : g.neighbors(u)) {
      if (u < v && q.test(v)) edges.emplace_back(remap[u], remap[v]);
    }
  }
  return AdjacencyGraph(std::move(vertices), std::move(edges), g.mode());
}

std::pair<std::uint32_t, std::uint32_t> min_degree_vertex(
    const AdjacencyGraph& g, const VertexSubset& alive) {
  assert(alive.size() == g.vertex_count());
  bool found = false;
  std::uint32_t best = 0, best_deg = 0;
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u) {
    if (!alive.test(u)) continue;
    std::uint32_t d = 0;
    for (std::uint32_t v : g.neighbors(u)) d += alive.test(v) ? 1 : 0;
    if (!found || d < best_deg) {
      found = true;
      best = u;
      best_deg = d;
    }
  }
  if (!found) throw EmptySubsetError("min_degree_vertex over empty subset");
  return {best, best_deg};
}

}  // namespace qtc
