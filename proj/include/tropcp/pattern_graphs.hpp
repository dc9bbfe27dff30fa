// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Zero-pattern graphs of symmetric tropical matrices, vertex and edge clique
// covers, and the exact searches over them.
//
// Vertices are 0-based here; file formats and reports use 1-based labels.
// Vertex sets are bitmasks, which caps graphs at 64 vertices. The exact
// searches are exponential and meant for a dozen vertices or so.

#ifndef TROPCP_PATTERN_GRAPHS_HPP
#define TROPCP_PATTERN_GRAPHS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tropcp/trop_core.hpp"

namespace tropcp {

using VertexSet = std::uint64_t;
using Edge = std::pair<std::size_t, std::size_t>;

inline constexpr std::size_t kMaxGraphOrder = 64;

/// Simple undirected graph on {0, …, n-1}.
class PatternGraph {
 public:
  PatternGraph() = default;
  /// Throws std::invalid_argument on loops or out-of-range endpoints.
  /// Repeated edges collapse.
  explicit PatternGraph(std::size_t n, std::span<const Edge> edges = {});

  static PatternGraph complete(std::size_t n);
  static PatternGraph path(std::size_t n);
  static PatternGraph star(std::size_t leaves);

  std::size_t order() const { return adjacency_.size(); }
  VertexSet vertices() const;
  VertexSet neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return (adjacency_[u] >> v) & 1U; }
  bool is_clique(VertexSet s) const;
  bool has_edges() const;
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
};

inline VertexSet singleton(std::size_t v) { return VertexSet{1} << v; }
std::vector<std::size_t> members(VertexSet s);
VertexSet to_vertex_set(std::span<const std::size_t> vs);

/// Canonical clique order: larger first, then lexicographic on the sorted
/// member list.
bool clique_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

/// Vertex clique cover (K_{q1}, …, K_{qk}, l·K1), kept in canonical order so
/// that q1 >= … >= qk >= 2 and the singletons come last.
class CliqueCover {
 public:
  /// Throws std::invalid_argument unless every set is a nonempty clique of g
  /// and every vertex of g is covered.
  CliqueCover(const PatternGraph& g, std::vector<std::vector<std::size_t>> cliques);

  const std::vector<std::vector<std::size_t>>& cliques() const { return cliques_; }
  std::size_t order() const { return order_; }
  /// Number of cliques with at least two vertices.
  std::size_t k() const;
  /// Number of singleton cliques.
  std::size_t l() const;
  /// q1 >= … >= qk.
  std::vector<std::size_t> large_sizes() const;
  bool is_partition() const;

  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::vector<std::size_t>> cliques_;
};

/// Cliques whose edge sets jointly cover E(G).
class EdgeCliqueCover {
 public:
  /// Throws std::invalid_argument unless every set is a clique of g and
  /// every edge of g lies in one of them.
  EdgeCliqueCover(const PatternGraph& g, std::vector<std::vector<std::size_t>> cliques);

  const std::vector<std::vector<std::size_t>>& cliques() const { return cliques_; }
  std::size_t size() const { return cliques_.size(); }

 private:
  std::vector<std::vector<std::size_t>> cliques_;
};

/// {i, j} is an edge iff i != j and a_ij = 0.
PatternGraph pattern_graph(const SymTropMatrix& a);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Breadth-first distances from source; kUnreachable when disconnected.
std::vector<int> distances_from(const PatternGraph& g, std::size_t source);
/// Largest pairwise distance; kUnreachable for a disconnected graph, 0 for a
/// single vertex.
int diameter(const PatternGraph& g);

/// Subgraph induced on the given vertices, relabeled 0..|S|-1 in ascending
/// order. Throws std::invalid_argument on an invalid or repeated vertex.
PatternGraph induced_subgraph(const PatternGraph& g, std::span<const std::size_t> vertices);

/// G ∨ w: a new vertex n adjacent to every existing vertex.
PatternGraph join_vertex(const PatternGraph& g);

/// Every nonempty clique.
std::vector<VertexSet> all_cliques(const PatternGraph& g);
/// Maximal cliques (Bron–Kerbosch with pivoting), ascending by mask.
std::vector<VertexSet> maximal_cliques(const PatternGraph& g);

/// k + Σ (i-1) q_i + k l + ⌊l²/4⌋ for the clique sizes in the order given.
long long theta_formula(std::span<const std::size_t> ordered_sizes, std::size_t singletons);
/// θ(γ) with γ's canonical descending order.
long long theta(const CliqueCover& cover);

struct ThetaCover {
  CliqueCover cover;
  long long theta;
};

/// A clique partition minimizing θ. Ties go to the lexicographically
/// smallest canonical clique list. Overlapping covers never beat the best
/// partition: shrinking a shared vertex out of one clique cannot raise θ.
ThetaCover min_theta_cover(const PatternGraph& g);

/// Partition with θ no larger than the cover's: every vertex stays in the
/// first canonical clique that contains it and leaves the later ones.
CliqueCover to_partition(const PatternGraph& g, const CliqueCover& cover);

/// Fewest cliques covering every vertex, i.e. the chromatic number of the
/// complement.
std::size_t min_vertex_clique_cover_size(const PatternGraph& g);

struct EdgeCoverResult {
  std::size_t number;
  EdgeCliqueCover cover;
};

/// cc(G) by branch and bound over maximal cliques. Edgeless graphs give 0.
EdgeCoverResult edge_clique_cover_number(const PatternGraph& g);

/// Upper bound on the CP-rank of a normalized completely positive matrix
/// from its pattern: exactly n when G(A) is edgeless and n <= 4, otherwise
/// the minimum θ over clique partitions. Throws NotNormalized.
long long cp_rank_upper_bound(const SymTropMatrix& a);

/// 0 on edges and the diagonal, 1 at {u, v}, 2 on every other non-edge.
/// Throws std::invalid_argument when u = v, u and v are adjacent, or either
/// is out of range.
SymTropMatrix diameter_witness_matrix(const PatternGraph& g, std::size_t u, std::size_t v);

}  // namespace tropcp

#endif  // TROPCP_PATTERN_GRAPHS_HPP
