#include "qtc/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

#include "qtc/detail/elimination.hpp"
#include "qtc/errors.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qtc {

DegeneracyResult degeneracy_order(const AdjacencyGraph& g) {
  auto elim = detail::min_degree_elimination(g);
  return {int(elim.max_removal_degree), std::move(elim.order)};
}

namespace {

// Greedy maximal clique: descend vertices by (degree, canonical index) and
// keep those adjacent to everything taken so far.
std::vector<std::uint32_t> greedy_clique(const AdjacencyGraph& g) {
  const std::uint32_t n = std::uint32_t(g.vertex_count());
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  std::vector<std::uint32_t> clique;
  for (std::uint32_t v : order) {
    bool ok = true;
    for (std::uint32_t c : clique) {
      if (!g.has_edge(v, c)) {
        ok = false;
        break;
      }
    }
    if (ok) clique.push_back(v);
  }
  return clique;
}

class KColorSearch {
 public:
  KColorSearch(const AdjacencyGraph& g, int k, std::uint64_t node_budget)
      : g_(g),
        k_(k),
        budget_(node_budget),
        colors_(g.vertex_count(), -1),
        neighbor_color_count_(g.vertex_count() * std::size_t(k), 0) {}

  KColorResult run() {
    KColorResult result;
    const std::uint32_t n = std::uint32_t(g_.vertex_count());
    if (n == 0) {
      result.status = Feasibility::yes;
      return result;
    }

    const auto clique = greedy_clique(g_);
    if (int(clique.size()) > k_) {
      result.status = Feasibility::no;  // clique alone needs more colors
      result.nodes = nodes_;
      return result;
    }
    // Fixing one maximal clique's colors breaks the color-permutation
    // symmetry without losing any solution.
    for (std::size_t i = 0; i < clique.size(); ++i) {
      assign(clique[i], int(i));
    }
    used_colors_ = int(clique.size());
    uncolored_ = n - std::uint32_t(clique.size());

    const Feasibility status = search();
    result.status = status;
    result.nodes = nodes_;
    if (status == Feasibility::yes) result.assignment = colors_;
    return result;
  }

 private:
  void assign(std::uint32_t v, int c) {
    colors_[v] = c;
    for (std::uint32_t u : g_.neighbors(v)) {
      ++neighbor_color_count_[u * std::size_t(k_) + std::size_t(c)];
    }
  }
  void unassign(std::uint32_t v) {
    const int c = colors_[v];
    colors_[v] = -1;
    for (std::uint32_t u : g_.neighbors(v)) {
      --neighbor_color_count_[u * std::size_t(k_) + std::size_t(c)];
    }
  }
  int saturation(std::uint32_t v) const {
    int s = 0;
    for (int c = 0; c < k_; ++c) {
      s += neighbor_color_count_[v * std::size_t(k_) + std::size_t(c)] > 0;
    }
    return s;
  }

  Feasibility search() {
    if (uncolored_ == 0) return Feasibility::yes;
    if (++nodes_ > budget_) return Feasibility::unknown;

    // Most saturated uncolored vertex, canonical tie-break.
    std::uint32_t pick = 0;
    int best_sat = -1;
    for (std::uint32_t v = 0; v < std::uint32_t(g_.vertex_count()); ++v) {
      if (colors_[v] >= 0) continue;
      const int s = saturation(v);
      if (s > best_sat) {
        best_sat = s;
        pick = v;
      }
    }

    // New color classes enter in canonical order: at most one untried color.
    const int limit = std::min(k_, used_colors_ + 1);
    bool saw_unknown = false;
    for (int c = 0; c < limit; ++c) {
      if (neighbor_color_count_[pick * std::size_t(k_) + std::size_t(c)] > 0) {
        continue;
      }
      assign(pick, c);
      --uncolored_;
      const int prev_used = used_colors_;
      used_colors_ = std::max(used_colors_, c + 1);
      const Feasibility sub = search();
      if (sub == Feasibility::yes) return sub;
      if (sub == Feasibility::unknown) saw_unknown = true;
      used_colors_ = prev_used;
      ++uncolored_;
      unassign(pick);
    }
    return saw_unknown ? Feasibility::unknown : Feasibility::no;
  }

  const AdjacencyGraph& g_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colors_;
  std::vector<std::uint16_t> neighbor_color_count_;
  int used_colors_ = 0;
  std::uint32_t uncolored_ = 0;
};

}  // namespace

KColorResult is_k_colorable(const AdjacencyGraph& g, int k,
                            const SearchBudget& budget) {
  assert(k >= 1);
  return KColorSearch(g, k, budget.max_oracle_nodes).run();
}

int chromatic_number(const AdjacencyGraph& g, const SearchBudget& budget) {
  if (g.vertex_count() == 0) return 0;
  const int lower = std::max<int>(1, int(greedy_clique(g).size()));
  const int upper = degeneracy_order(g).degeneracy + 1;
  for (int k = lower; k <= upper; ++k) {
    const KColorResult res = is_k_colorable(g, k, budget);
    if (res.status == Feasibility::unknown) {
      throw BudgetExceededError("k-colorability undecided for k=" +
                                std::to_string(k) + " within " +
                                std::to_string(budget.max_oracle_nodes) +
                                " nodes");
    }
    if (res.status == Feasibility::yes) return k;
  }
  throw InternalInvariantError(
      "no k-coloring up to degeneracy+1; oracle is inconsistent");
}

namespace {

// Exact chromatic number of one candidate, or nullopt if the node budget ran
// out before the answer was certain.
struct CandidateEval {
  int chi = 0;
  bool decided = false;
  std::vector<int> chi_assignment;
};

CandidateEval evaluate(const Quadtree& tree, AdjacencyMode mode,
                       const SearchBudget& budget) {
  CandidateEval out;
  const AdjacencyGraph g = build_graph(tree, mode, Exec::seq);
  const int lower = std::max<int>(1, int(greedy_clique(g).size()));
  const int upper = degeneracy_order(g).degeneracy + 1;
  for (int k = lower; k <= upper; ++k) {
    const KColorResult res = is_k_colorable(g, k, budget);
    if (res.status == Feasibility::unknown) return out;  // undecided
    if (res.status == Feasibility::yes) {
      out.chi = k;
      out.decided = true;
      out.chi_assignment = res.assignment;
      return out;
    }
  }
  return out;
}

// Deterministic candidate stream: exhaustive trees first, then seeded random
// trees of stepwise increasing depth. Emits only trees within max_leaves.
class CandidateStream {
 public:
  CandidateStream(const WitnessGen& gen, bool require_balanced)
      : gen_(gen), require_balanced_(require_balanced) {
    gen_.max_random_depth =
        std::max(gen_.max_random_depth, gen_.min_random_depth);
    exhaustive_ = enumerate_trees(gen_.exhaustive_splits);
  }

  // Next candidate or nullopt when the stream is exhausted for good.
  std::optional<Quadtree> next() {
    while (pos_ < exhaustive_.size()) {
      const Quadtree& t = exhaustive_[pos_++];
      if (admit(t)) return t;
    }
    const int depth_span = gen_.max_random_depth - gen_.min_random_depth + 1;
    while (random_emitted_ <
           gen_.random_per_depth * std::uint64_t(depth_span) * 64) {
      const std::uint64_t i = random_index_++;
      RandomCfg cfg;
      cfg.seed = mix64(gen_.seed ^ (i * 0x9e3779b97f4a7c15ull + 1));
      cfg.max_depth =
          gen_.min_random_depth +
          int(std::min<std::uint64_t>(i / gen_.random_per_depth,
                                      std::uint64_t(depth_span - 1)));
      cfg.split_prob = gen_.split_prob;
      cfg.balanced = require_balanced_;
      const Quadtree t = generate_random(cfg);
      ++random_emitted_;
      if (admit(t)) return t;
    }
    return std::nullopt;
  }

 private:
  bool admit(const Quadtree& t) const {
    if (t.leaf_count() > gen_.max_leaves) return false;
    if (require_balanced_ && !is_balanced(t, Exec::seq)) return false;
    return true;
  }

  WitnessGen gen_;
  bool require_balanced_;
  std::vector<Quadtree> exhaustive_;
  std::size_t pos_ = 0;
  std::uint64_t random_index_ = 0;
  std::uint64_t random_emitted_ = 0;
};

}  // namespace

WitnessReport find_witness(AdjacencyMode mode, int target_chi,
                           bool require_balanced, const WitnessGen& gen,
                           const SearchBudget& budget, Exec exec) {
  assert(target_chi >= 2);
  WitnessReport report;
  report.mode = mode;

  CandidateStream stream(gen, require_balanced);
  const auto t0 = std::chrono::steady_clock::now();
  int best_chi = 0;
  std::optional<Quadtree> best_tree;
  std::vector<int> best_assignment;
  bool done = false;

  while (!done && report.candidates_tried < budget.max_candidates) {
    // One deterministic batch; evaluation order inside the batch does not
    // matter because reconciliation is by index.
    std::vector<Quadtree> batch;
    const std::size_t batch_target = 256;
    while (batch.size() < batch_target &&
           report.candidates_tried + batch.size() < budget.max_candidates) {
      auto t = stream.next();
      if (!t) break;
      batch.push_back(std::move(*t));
    }
    if (batch.empty()) break;

    std::vector<CandidateEval> evals(batch.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 4) \
    if (exec == Exec::par && batch.size() > 8)
#endif
    for (std::int64_t i = 0; i < std::int64_t(batch.size()); ++i) {
      evals[std::size_t(i)] = evaluate(batch[std::size_t(i)], mode, budget);
    }
#if !defined(_OPENMP)
    (void)exec;
#endif

    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++report.candidates_tried;
      if (!evals[i].decided) continue;
      if (evals[i].chi > best_chi) {
        best_chi = evals[i].chi;
        best_tree = batch[i];
        best_assignment = evals[i].chi_assignment;
      }
      if (evals[i].chi >= target_chi) {
        report.found = true;
        done = true;
        break;
      }
    }

    if (budget.wall_limit_s > 0) {
      const std::chrono::duration<double> dt =
          std::chrono::steady_clock::now() - t0;
      if (dt.count() > budget.wall_limit_s) break;
    }
  }

  if (best_tree) {
    report.tree = best_tree;
    report.chi = best_chi;
    Coloring cert;
    cert.keys = best_tree->leaves();
    cert.colors = best_assignment;
    cert.mode = mode;
    for (int c : cert.colors) {
      cert.palette_size = std::max(cert.palette_size, c + 1);
    }
    report.certificate = std::move(cert);
    // chi came from an exact scan, so the (chi-1)-decision necessarily ran
    // to completion; recompute it here as the recorded transcript.
    if (best_chi > 1) {
      const AdjacencyGraph g = build_graph(*best_tree, mode, Exec::seq);
      const KColorResult below = is_k_colorable(g, best_chi - 1, budget);
      report.k_minus_1_exhausted = below.status == Feasibility::no;
    } else {
      report.k_minus_1_exhausted = true;
    }
  }
  return report;
}

}  // namespace qtc
