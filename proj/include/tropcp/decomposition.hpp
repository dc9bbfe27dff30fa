// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Constructive decompositions from a vertex clique cover.
//
// With the cover's cliques relabeled to consecutive indices and the
// singletons last, A splits into four blocks: inside cliques (A1), between
// cliques (A2), clique to singleton (A3) and singleton to singleton (A4).
// The first three have closed forms with k, Σ(i-1)q_i and k·l factors. A4
// has closed forms for l <= 3. Beyond that we fall back to one factor per
// finite singleton pair, merge factors greedily, and try a small exact
// search; the achieved count is reported, not assumed.

#ifndef TROPCP_DECOMPOSITION_HPP
#define TROPCP_DECOMPOSITION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropcp/cp_analysis.hpp"
#include "tropcp/pattern_graphs.hpp"
#include "tropcp/trop_core.hpp"

namespace tropcp {

struct BlockCounts {
  std::size_t a1 = 0;
  std::size_t a2 = 0;
  std::size_t a3 = 0;
  std::size_t a4 = 0;

  std::size_t total() const { return a1 + a2 + a3 + a4; }
  friend bool operator==(const BlockCounts&, const BlockCounts&) = default;
};

/// Index bookkeeping for the block construction.
struct BlockPlan {
  /// The cover as a partition, in original labels.
  CliqueCover cover;
  /// order[p] is the original vertex placed at position p. Clique i occupies
  /// positions q1 + … + q_{i-1} through q1 + … + q_i - 1; singletons follow.
  std::vector<std::size_t> order;
  /// q1 >= … >= qk >= 2.
  std::vector<std::size_t> clique_sizes;
  std::size_t singletons = 0;
  /// k, Σ(i-1)q_i, k·l and ⌊l²/4⌋: the counts θ charges for each block.
  BlockCounts planned;

  /// A with rows and columns reordered so that position p holds order[p].
  SymTropMatrix relabel(const SymTropMatrix& a) const;
  /// First position of clique i (0-based).
  std::size_t clique_start(std::size_t i) const;
  std::size_t singleton_start() const;
};

/// Plan for a normalized A and a vertex clique cover of G(A). Overlapping
/// covers are first reduced to a partition with no larger θ. With exactly
/// three singletons, the lexicographically last singleton pair carrying the
/// largest entry is placed last. Throws std::invalid_argument when the
/// cover is not a cover of G(A), NotNormalized for non-normalized input.
BlockPlan make_block_plan(const SymTropMatrix& a, const CliqueCover& cover);

// Block builders work on the relabeled matrix and return factors in the
// relabeled coordinates.

/// x(i): 0 on clique i, ∞ elsewhere.
std::vector<TropVector> build_block_A1(const SymTropMatrix& relabeled, const BlockPlan& plan);
/// y(i,j,s) for i < j and s in clique j: 0 at s, a_ts for t in clique i.
std::vector<TropVector> build_block_A2(const SymTropMatrix& relabeled, const BlockPlan& plan);
/// z(i,j) for clique i and singleton j: 0 at j, a_tj for t in clique i.
std::vector<TropVector> build_block_A3(const SymTropMatrix& relabeled, const BlockPlan& plan);

struct SingletonBlock {
  std::vector<TropVector> factors;
  /// The closed forms for two or three singletons did not apply.
  bool used_fallback = false;
  /// An exact search beat the pairwise fallback.
  bool used_search = false;
};

/// Factors covering the singleton-to-singleton entries. When k = 0 they
/// also cover the singleton diagonal, which A3 handles otherwise.
/// search_node_budget = 0 disables the exact search pass.
SingletonBlock build_block_A4(const SymTropMatrix& relabeled, const BlockPlan& plan,
                              std::uint64_t search_node_budget = 20'000);

struct Construction {
  Decomposition decomposition;
  BlockPlan plan;
  /// Factors actually produced per block.
  BlockCounts achieved;
  bool used_fallback = false;
  bool used_search = false;
};

/// Full block construction, factors mapped back to the original labels.
/// Throws as make_block_plan.
Construction construct_with_details(const SymTropMatrix& a, const CliqueCover& cover,
                                    std::uint64_t search_node_budget = 20'000);

Decomposition construct_decomposition(const SymTropMatrix& a, const CliqueCover& cover);

/// Decompose any completely positive matrix: normalize, take a min-θ cover,
/// construct, and lift the factors back. Throws NotCompletelyPositive.
Decomposition decompose(const SymTropMatrix& a);

/// v(i) with 0 at i and 1 elsewhere, for the n×n matrix with zero diagonal
/// and every off-diagonal entry 1. Throws std::invalid_argument for n = 0.
Decomposition empty_pattern_01_decomposition(std::size_t n);

}  // namespace tropcp

#endif  // TROPCP_DECOMPOSITION_HPP
