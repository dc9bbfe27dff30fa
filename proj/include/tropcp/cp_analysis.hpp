// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Completely positive membership, the rank-one test, diagonal normalization
// and support extraction.

#ifndef TROPCP_CP_ANALYSIS_HPP
#define TROPCP_CP_ANALYSIS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tropcp/trop_core.hpp"

namespace tropcp {

/// Raised when an operation that assumes a completely positive input is
/// handed a matrix that is not.
class NotCompletelyPositive : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation that assumes zero diagonal and nonnegative
/// off-diagonal entries is handed something else.
class NotNormalized : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// What normalize() removed and subtracted, in original 0-based indices.
struct NormalizationRecord {
  std::size_t original_dimension = 0;
  /// Indices with an infinite diagonal entry, ascending.
  std::vector<std::size_t> deleted_indices;
  /// Surviving original indices, ascending; row i of the normalized matrix
  /// is original row kept_indices[i].
  std::vector<std::size_t> kept_indices;
  /// shifts[i] = a_kk / 2 for k = kept_indices[i].
  std::vector<Rational> shifts;

  /// Undo the transform on a normalized matrix.
  SymTropMatrix restore(const SymTropMatrix& normalized) const;
  /// Lift a factor of the normalized matrix to one of the original: insert ∞
  /// at deleted indices and add the shift back on every kept coordinate.
  TropVector lift(const TropVector& factor) const;
  /// Lift every factor; the result reconstructs restore(d.target()).
  Decomposition lift(const Decomposition& d) const;
};

struct Normalized {
  SymTropMatrix matrix;
  NormalizationRecord record;
};

/// 2 a_ij >= a_ii + a_jj for all i, j.
bool is_completely_positive(const SymTropMatrix& a);

/// True iff a_{i j1} ⊙ a_{k j2} = a_{k j1} ⊙ a_{i j2} for all indices.
/// Throws NotCompletelyPositive.
bool cp_rank_is_one(const SymTropMatrix& a);

/// The b with b ⊙ bᵀ = a, anchored at the first row with a finite diagonal
/// entry. An all-∞ matrix yields the all-∞ vector. Throws
/// std::invalid_argument when a does not have CP-rank one.
TropVector extract_rank_one_factor(const SymTropMatrix& a);

/// Delete rows with infinite diagonal, then subtract a_ii/2 from row and
/// column i. The result has zero diagonal and nonnegative off-diagonal
/// entries, and the same CP-rank. Throws NotCompletelyPositive.
Normalized normalize(const SymTropMatrix& a);

/// Zero diagonal and every off-diagonal entry >= 0 or ∞.
bool is_normalized(const SymTropMatrix& a);

/// 0 where a_ij = 0, 1 elsewhere (∞ included).
SymTropMatrix support(const SymTropMatrix& a);

}  // namespace tropcp

#endif  // TROPCP_CP_ANALYSIS_HPP
