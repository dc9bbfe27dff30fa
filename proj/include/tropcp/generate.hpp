// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Seeded random instances with a prescribed zero pattern.

#ifndef TROPCP_GENERATE_HPP
#define TROPCP_GENERATE_HPP

#include <cstdint>

#include "tropcp/pattern_graphs.hpp"
#include "tropcp/trop_core.hpp"

namespace tropcp {

struct EntryRange {
  /// Off-edge entries are p/q with 1 <= p <= max_numerator and
  /// 1 <= q <= max_denominator.
  std::uint32_t max_numerator = 9;
  std::uint32_t max_denominator = 1;
  /// Chance in percent that an off-edge entry is ∞ instead.
  std::uint32_t infinity_percent = 0;
};

/// A normalized completely positive matrix whose zeros sit exactly on the
/// diagonal and the edges of g. The same seed gives the same matrix on every
/// platform. Throws std::invalid_argument when a bound is zero or
/// infinity_percent exceeds 100.
SymTropMatrix generate_instance(const PatternGraph& g, std::uint64_t seed, const EntryRange& range = {});

}  // namespace tropcp

#endif  // TROPCP_GENERATE_HPP
