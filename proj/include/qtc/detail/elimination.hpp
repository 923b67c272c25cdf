#pragma once

#include <cstdint>
#include <vector>

#include "qtc/adjacency.hpp"

namespace qtc::detail {

struct EliminationResult {
  std::vector<std::uint32_t> order;           // removal sequence
  std::vector<std::uint32_t> removal_degree;  // alive degree at removal
  std::uint32_t max_removal_degree = 0;
};

// Repeated minimum-degree removal over per-degree buckets, ties broken by
// canonical vertex order. If fail_above >= 0 and an extraction sees minimum
// alive degree above it, throws DegeneracyExceeded.
EliminationResult min_degree_elimination(const AdjacencyGraph& g,
                                         int fail_above = -1);

}  // namespace qtc::detail
