#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtc/exec.hpp"
#include "qtc/quadtree.hpp"
#include "qtc/square_key.hpp"

namespace qtc {

// EDGE: closed boundaries share a segment of positive length.
// CORNER: closed boundaries intersect at all (includes every EDGE pair).
enum class AdjacencyMode { edge, corner };

std::string to_string(AdjacencyMode mode);

// Exact integer predicate on two non-overlapping squares. Throws OverlapError
// if the interiors intersect (the keys cannot be leaves of one partition).
bool are_adjacent(const SquareKey& a, const SquareKey& b, AdjacencyMode mode);

// Immutable CSR adjacency over the leaves of one tree, vertex order =
// canonical leaf order, neighbor lists sorted.
class AdjacencyGraph {
 public:
  AdjacencyGraph() = default;
  // `edges` must be i<j pairs; they are normalized, sorted and deduplicated.
  AdjacencyGraph(std::vector<SquareKey> vertices,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                 AdjacencyMode mode);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  AdjacencyMode mode() const { return mode_; }
  const std::vector<SquareKey>& vertices() const { return vertices_; }
  const SquareKey& vertex(std::uint32_t i) const { return vertices_[i]; }

  std::span<const std::uint32_t> neighbors(std::uint32_t i) const {
    return {neighbors_.data() + offsets_[i],
            neighbors_.data() + offsets_[i + 1]};
  }
  std::uint32_t degree(std::uint32_t i) const {
    return offsets_[i + 1] - offsets_[i];
  }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;

  // Unique i<j pairs in sorted order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_pairs() const;

 private:
  std::vector<SquareKey> vertices_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> neighbors_;
  AdjacencyMode mode_ = AdjacencyMode::edge;
};

// Neighbor discovery via hash lookups per leaf side/corner; O(n log n) overall
// and data-parallel across leaves.
AdjacencyGraph build_graph(const Quadtree& tree, AdjacencyMode mode,
                           Exec exec = Exec::par);

// Bitset over the vertices of one graph.
class VertexSubset {
 public:
  VertexSubset() = default;
  explicit VertexSubset(std::size_t n, bool all = false)
      : bits_(n, all ? 1 : 0) {}
  static VertexSubset all(std::size_t n) { return VertexSubset(n, true); }

  std::size_t size() const { return bits_.size(); }
  bool test(std::uint32_t i) const { return bits_[i] != 0; }
  void set(std::uint32_t i) { bits_[i] = 1; }
  void reset(std::uint32_t i) { bits_[i] = 0; }
  std::size_t count() const;

 private:
  std::vector<unsigned char> bits_;
};

// Vertices restricted to `q`, canonical order preserved.
AdjacencyGraph induced_subgraph(const AdjacencyGraph& g, const VertexSubset& q);

// Canonically-first vertex of minimum degree within `alive` (degree counted
// within alive). Throws EmptySubset.
std::pair<std::uint32_t, std::uint32_t> min_degree_vertex(
    const AdjacencyGraph& g, const VertexSubset& alive);

}  // namespace qtc
