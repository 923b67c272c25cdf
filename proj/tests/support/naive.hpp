#pragma once

// Independent reference implementations used only by tests. Everything here
// is deliberately the slow, obvious version of what the library computes.

#include <cstdint>
#include <vector>

#include "qtc/adjacency.hpp"
#include "qtc/quadtree.hpp"

namespace qtc::testing {

// Quadratic all-pairs graph via the are_adjacent predicate.
AdjacencyGraph naive_graph(const Quadtree& tree, AdjacencyMode mode);

// Balance check over all edge-adjacent pairs from the all-pairs predicate.
bool naive_is_balanced(const Quadtree& tree);

// Plain lexicographic backtracking over color assignments: vertices in
// canonical order, colors 0..k-1 in order, prune only on direct conflicts.
bool naive_k_colorable(const AdjacencyGraph& g, int k);

// Full odometer over all k^n assignments (no pruning); tiny n only.
bool exhaustive_k_colorable(const AdjacencyGraph& g, int k);

// Smallest k <= k_max with naive_k_colorable, or k_max + 1.
int naive_chromatic(const AdjacencyGraph& g, int k_max);

// Deterministic pseudo-random vertex subset (seeded), never empty for n > 0.
VertexSubset random_subset(std::size_t n, std::uint64_t seed);

}  // namespace qtc::testing
