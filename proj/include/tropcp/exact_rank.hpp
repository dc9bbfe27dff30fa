// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Exact CP-rank at desk scale.
//
// Deciding CPrk(A) <= r for a normalized A is a search over two layers:
//
//  1. A zero-set skeleton: a multiset of r cliques of G(A) (the empty set
//     allowed) naming where each factor is zero. The skeleton must cover
//     every vertex (diagonal zeros) and every edge (off-diagonal zeros).
//  2. A designated achiever for every positive finite entry a_kl: the factor
//     whose b_k + b_l must equal a_kl exactly.
//
// A factor is finite only on its zero set and the coordinates of its
// designated entries. Given that, feasibility of each factor is a small
// system of two-variable sums over the rationals, decided exactly by
// substitution and Fourier–Motzkin elimination. The tropical minimum of any
// decomposition is attained by some factor, so the two layers together are
// complete; every returned decomposition is re-verified entrywise.

#ifndef TROPCP_EXACT_RANK_HPP
#define TROPCP_EXACT_RANK_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropcp/trop_core.hpp"

namespace tropcp {

enum class Relation { kEqual, kAtLeast };

inline constexpr std::size_t kNoVariable = static_cast<std::size_t>(-1);

/// b_first + b_second (= or >=) rhs. second == first reads 2·b_first and
/// second == kNoVariable reads b_first alone.
struct PairConstraint {
  std::size_t first;
  std::size_t second;
  Relation relation;
  Rational rhs;
};

struct FactorConstraintSystem {
  std::size_t dimension = 0;
  /// Coordinates allowed to be finite; everything else is ∞.
  std::vector<std::size_t> support;
  std::vector<PairConstraint> constraints;
};

/// A vector meeting every constraint exactly, ∞ off the support, or nullopt.
/// Equalities are eliminated by substitution along their connected
/// components first. Throws std::invalid_argument when a constraint names a
/// coordinate outside the support.
std::optional<TropVector> solve_factor_system(const FactorConstraintSystem& system);

struct SearchLimits {
  std::uint64_t node_limit = 10'000'000;
  double time_limit_seconds = 300.0;
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t refutations = 0;
  std::uint64_t skeletons = 0;
  double seconds = 0.0;

  SearchStats& operator+=(const SearchStats& other);
};

enum class SearchOutcome { kFound, kRefuted, kUndetermined };

const char* to_string(SearchOutcome outcome);

struct LeqResult {
  SearchOutcome outcome = SearchOutcome::kUndetermined;
  /// Present iff outcome is kFound; at most r factors, none all-∞.
  std::optional<Decomposition> decomposition;
  SearchStats stats;
  /// "node limit" or "time limit" when undetermined.
  std::string reason;
};

/// Decide whether a normalized completely positive matrix has CP-rank <= r.
/// A refutation is complete; a resource stop is reported as kUndetermined.
/// With several threads the skeletons are shared out, and the certificate
/// from the earliest successful skeleton wins, as in a sequential run.
/// Throws NotNormalized.
LeqResult cp_rank_leq(const SymTropMatrix& a, std::size_t r, const SearchLimits& limits = {});

/// max(cc(G) + isolated vertices, fewest cliques covering the vertices, 1)
/// for a normalized A: zero sets of factors are cliques that must cover
/// every edge and every vertex. Throws NotNormalized.
std::size_t rank_lower_bound(const SymTropMatrix& a);

/// Proof that no decomposition with r factors exists.
struct RefutationToken {
  std::size_t r;
  SearchStats stats;
};

struct RankCertificate {
  /// Verified decomposition of the input matrix.
  std::optional<Decomposition> upper;
  /// Consecutive refuted r, starting at the structural lower bound.
  std::vector<RefutationToken> lower;
  /// Rank is at least this before any search.
  std::size_t structural_lower_bound = 0;
};

enum class RankStatus { kExact, kNotCompletelyPositive, kUndetermined };

const char* to_string(RankStatus status);

struct RankResult {
  RankStatus status = RankStatus::kUndetermined;
  /// The CP-rank when status is kExact.
  std::size_t rank = 0;
  /// Largest proven lower bound; equals rank when exact.
  std::size_t proven_lower_bound = 0;
  RankCertificate certificate;
  SearchStats total;
  /// Why the rank stayed undetermined: "node limit", "time limit", "r_max".
  std::string reason;
};

/// Smallest r <= r_max with a decomposition of A, searching upward from
/// rank_lower_bound on the normalized matrix. Non-CP input gets
/// kNotCompletelyPositive (rank ∞). The certificate is lifted back to A.
RankResult cp_rank_exact(const SymTropMatrix& a, std::size_t r_max,
                         const SearchLimits& limits = {});

/// CP-rank of a normalized 0/1 matrix: cc(G(A)) plus the number of isolated
/// vertices, which is n for an edgeless pattern. Throws
/// std::invalid_argument on any other input.
std::size_t zero_one_rank(const SymTropMatrix& a);

}  // namespace tropcp

#endif  // TROPCP_EXACT_RANK_HPP
