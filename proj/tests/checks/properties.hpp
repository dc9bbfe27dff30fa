// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Randomized property suites shared by the unit tests and the acceptance
// binary. Each suite runs a fixed number of seeded cases and records the
// first failure it sees.

#ifndef TROPCP_TESTS_PROPERTIES_HPP
#define TROPCP_TESTS_PROPERTIES_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace tropcp::checks {

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return cases > 0 && failures == 0; }
  std::string summary() const;
};

/// Constructive decompositions of random normalized matrices (n <= max_n)
/// under minimum-θ and random covers reconstruct the input and respect the
/// block counts.
SuiteResult decomposition_suite(std::uint32_t seed, std::size_t count, std::size_t max_n = 7);

/// cc(G(A)) <= rank_lower_bound <= exact rank <= θ bound, and the exact rank
/// agrees with the brute-force oracle.
SuiteResult sandwich_suite(std::uint32_t seed, std::size_t count, std::size_t max_n = 4);

/// normalize is idempotent, invertible on kept rows, and preserves the rank.
SuiteResult normalization_suite(std::uint32_t seed, std::size_t count, std::size_t max_n = 4);

/// Adding a vertex joined by zeros to every other vertex leaves the rank.
SuiteResult join_vertex_suite(std::uint32_t seed, std::size_t count, std::size_t max_n = 4);

/// A leading principal submatrix never has larger rank than the whole.
SuiteResult induced_submatrix_suite(std::uint32_t seed, std::size_t count, std::size_t max_n = 5);

/// The pattern bound never exceeds max{n, ⌊n²/4⌋}: every graph up to
/// isomorphism for n <= exhaustive_n, then random graphs up to max_n.
SuiteResult theta_bound_suite(std::uint32_t seed, std::size_t exhaustive_n, std::size_t max_n,
                              std::size_t random_count);

}  // namespace tropcp::checks

#endif  // TROPCP_TESTS_PROPERTIES_HPP
