#include "qtc/detail/elimination.hpp"

#include <set>
#include <string>

#include "qtc/errors.hpp"

namespace qtc::detail {

EliminationResult min_degree_elimination(const AdjacencyGraph& g,
                                         int fail_above) {
  const std::uint32_t n = std::uint32_t(g.vertex_count());
  EliminationResult res;
  res.order.reserve(n);
  res.removal_degree.reserve(n);
  if (n == 0) return res;

  std::vector<std::uint32_t> deg(n);
  std::uint32_t max_deg = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  // One ordered bucket per degree; extraction takes the canonically-first
  // vertex of the lowest nonempty bucket, so ties always break by vertex
  // order. The cursor only moves down by one per neighbor update.
  std::vector<std::set<std::uint32_t>> buckets(max_deg + 1);
  for (std::uint32_t v = 0; v < n; ++v) buckets[deg[v]].insert(v);
  std::vector<char> alive(n, 1);
  std::uint32_t cursor = 0;

  for (std::uint32_t step = 0; step < n; ++step) {
    while (buckets[cursor].empty()) ++cursor;
    const std::uint32_t v = *buckets[cursor].begin();
    if (fail_above >= 0 && cursor > std::uint32_t(fail_above)) {
      throw DegeneracyExceededError(
          v, cursor,
          "minimum alive degree " + std::to_string(cursor) + " at vertex " +
              std::to_string(v) + " exceeds bound " +
              std::to_string(fail_above));
    }
    buckets[cursor].erase(buckets[cursor].begin());
    alive[v] = 0;
    res.order.push_back(v);
    res.removal_degree.push_back(cursor);
    res.max_removal_degree = std::max(res.max_removal_degree, cursor);

    for (std::uint32_t u : g.neighbors(v)) {
      if (!alive[u]) continue;
      buckets[deg[u]].erase(u);
      --deg[u];
      buckets[deg[u]].insert(u);
      if (deg[u] < cursor) cursor = deg[u];
    }
  }
  return res;
}

}  // namespace qtc::detail
