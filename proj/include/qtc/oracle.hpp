#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qtc/adjacency.hpp"
#include "qtc/coloring.hpp"
#include "qtc/exec.hpp"
#include "qtc/generate.hpp"
#include "qtc/quadtree.hpp"

namespace qtc {

struct SearchBudget {
  std::uint64_t max_candidates = 100'000;       // witness search
  std::uint64_t max_oracle_nodes = 20'000'000;  // per k-colorability call
  double wall_limit_s = 0;  // advisory; 0 = unlimited, checked between batches
};

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<std::uint32_t> order;
};

// Min-degree removal order (canonical tie-break); degeneracy = max degree
// seen at removal time.
DegeneracyResult degeneracy_order(const AdjacencyGraph& g);

enum class Feasibility { yes, no, unknown };

struct KColorResult {
  Feasibility status = Feasibility::unknown;
  std::vector<int> assignment;  // proper k-coloring when status == yes
  std::uint64_t nodes = 0;      // search nodes spent
};

// Exact decision: complete backtracking, most-saturated vertex first
// (canonical tie-break), colors of one greedy maximal clique fixed up front,
// new color classes introduced in canonical order. `unknown` only on budget
// exhaustion, never conflated with `no`.
KColorResult is_k_colorable(const AdjacencyGraph& g, int k,
                            const SearchBudget& budget = {});

// Smallest k with is_k_colorable == yes, scanned from the greedy clique lower
// bound to degeneracy + 1. Throws BudgetExceeded if a decision ran out of
// nodes before the scan settled.
int chromatic_number(const AdjacencyGraph& g, const SearchBudget& budget = {});

// Candidate stream for witness search: all trees of at most
// `exhaustive_splits` splits first (canonical order), then seeded random
// trees of stepwise increasing depth. Trees with more than max_leaves leaves
// are never emitted.
struct WitnessGen {
  int exhaustive_splits = 6;
  std::uint64_t seed = 1;
  std::size_t max_leaves = 60;
  int min_random_depth = 3;
  int max_random_depth = 9;
  std::uint64_t random_per_depth = 4000;  // candidates per depth step
  Rational split_prob{3, 5};
};

struct WitnessReport {
  bool found = false;
  std::optional<Quadtree> tree;  // found witness, else best certified tree
  AdjacencyMode mode = AdjacencyMode::edge;
  int chi = 0;  // certified chromatic number of `tree` (0 = none certified)
  std::uint64_t candidates_tried = 0;
  std::optional<Coloring> certificate;  // proper chi-coloring of `tree`
  bool k_minus_1_exhausted = false;     // (chi-1)-search ran to completion
};

// Scans candidates in deterministic order for the first tree whose exact
// chromatic number reaches target_chi. Candidates whose chromatic number the
// budget could not settle are skipped (still counted). Evaluation may run in
// parallel; the report is always the serial-order result.
WitnessReport find_witness(AdjacencyMode mode, int target_chi,
                           bool require_balanced, const WitnessGen& gen = {},
                           const SearchBudget& budget = {},
                           Exec exec = Exec::par);

}  // namespace qtc
