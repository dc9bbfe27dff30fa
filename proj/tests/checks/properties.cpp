// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "checks/properties.hpp"

#include <algorithm>
#include <random>

#include "oracle/brute_force.hpp"
#include "support.hpp"
#include "tropcp/cp_analysis.hpp"
#include "tropcp/decomposition.hpp"
#include "tropcp/exact_rank.hpp"

namespace tropcp::checks {

std::string SuiteResult::summary() const {
  std::string out = std::to_string(cases - failures) + "/" + std::to_string(cases) + " cases";
  if (failures) out += "; first failure: " + first_failure;
  return out;
}

namespace {

void fail(SuiteResult& result, const SymTropMatrix& a, const std::string& what) {
  if (result.failures++ == 0) result.first_failure = what + " for\n" + render_matrix(a);
}

// Exact rank with the pattern bound as r_max; nullopt if the search stopped.
std::optional<std::size_t> exact_rank(const SymTropMatrix& a) {
  std::size_t r_max = 1;
  const auto c = normalize(a).matrix;
  if (c.dimension() > 0) r_max = static_cast<std::size_t>(cp_rank_upper_bound(c));
  const auto r = cp_rank_exact(a, r_max);
  if (r.status != RankStatus::kExact) return std::nullopt;
  return r.rank;
}

std::string show(std::optional<std::size_t> r) { return r ? std::to_string(*r) : "none"; }

}  // namespace

SuiteResult decomposition_suite(std::uint32_t seed, std::size_t count, std::size_t max_n) {
  std::mt19937 rng(seed);
  SuiteResult result;
  for (std::size_t trial = 0; trial < count; ++trial, ++result.cases) {
    const std::size_t n = 1 + trial % max_n;
    const auto a = testing::random_normalized(n, rng, 6, static_cast<std::uint32_t>(rng() % 30));
    const auto g = pattern_graph(a);
    const bool best = trial % 2 == 0;
    const auto cover = best ? min_theta_cover(g).cover : testing::random_partition_cover(g, rng);
    const auto built = construct_with_details(a, cover);
    const auto& d = built.decomposition;
    const std::size_t l = cover.l();
    const auto& plan = built.plan.planned;
    const std::size_t bound = plan.a1 + plan.a2 + plan.a3 + std::max(l * (l - (l > 0)) / 2, l);
    if (!verify_decomposition(a, d.factors())) {
      fail(result, a, "factors do not reconstruct the matrix");
    } else if (d.rank() > bound) {
      fail(result, a, std::to_string(d.rank()) + " factors exceed the block bound " + std::to_string(bound));
    } else if (cover.k() > 0 && l <= 3 && d.rank() > static_cast<std::size_t>(theta(cover))) {
      fail(result, a, std::to_string(d.rank()) + " factors exceed theta " + std::to_string(theta(cover)));
    } else if (built.achieved.a1 != plan.a1 || built.achieved.a2 != plan.a2 ||
               built.achieved.a3 != plan.a3) {
      fail(result, a, "clique blocks differ from the plan");
    }
  }
  return result;
}

SuiteResult sandwich_suite(std::uint32_t seed, std::size_t count, std::size_t max_n) {
  std::mt19937 rng(seed);
  SuiteResult result;
  for (std::size_t trial = 0; trial < count; ++trial, ++result.cases) {
    const std::size_t n = 1 + trial % max_n;
    const auto a = testing::random_normalized(n, rng, 3, 15);
    const std::size_t cc = edge_clique_cover_number(pattern_graph(a)).number;
    const std::size_t lower = rank_lower_bound(a);
    const auto upper = static_cast<std::size_t>(cp_rank_upper_bound(a));
    const auto exact = exact_rank(a);
    const auto oracle = oracle::cp_rank(a);
    if (!exact) {
      fail(result, a, "search did not finish");
    } else if (exact != oracle) {
      fail(result, a, "exact rank " + show(exact) + " but the oracle says " + show(oracle));
    } else if (!(cc <= lower && lower <= *exact && *exact <= upper)) {
      fail(result, a, "cc " + std::to_string(cc) + ", lower " + std::to_string(lower) + ", exact " +
                          show(exact) + ", upper " + std::to_string(upper) + " out of order");
    }
  }
  return result;
}

SuiteResult normalization_suite(std::uint32_t seed, std::size_t count, std::size_t max_n) {
  std::mt19937 rng(seed);
  SuiteResult result;
  for (std::size_t trial = 0; trial < count; ++trial, ++result.cases) {
    const std::size_t n = 1 + trial % max_n;
    const auto a = testing::random_cp(n, rng);
    const auto [c, record] = normalize(a);
    const auto again = normalize(c);
    const bool zero_shifts = std::all_of(again.record.shifts.begin(), again.record.shifts.end(),
                                         [](const Rational& s) { return s == 0; });
    const auto restored = record.restore(c);
    if (!is_normalized(c)) {
      fail(result, a, "C(A) is not normalized");
    } else if (again.matrix != c || !zero_shifts || !again.record.deleted_indices.empty()) {
      fail(result, a, "normalizing C(A) changed it");
    } else if (restored != a) {
      fail(result, a, "restore does not give back A");
    } else if (support(support(a)) != support(a)) {
      fail(result, a, "support is not idempotent");
    } else if (c.dimension() > 0 && exact_rank(a) != exact_rank(c)) {
      fail(result, a, "rank " + show(exact_rank(a)) + " but C(A) has rank " + show(exact_rank(c)));
    }
  }
  return result;
}

SuiteResult join_vertex_suite(std::uint32_t seed, std::size_t count, std::size_t max_n) {
  std::mt19937 rng(seed);
  SuiteResult result;
  for (std::size_t trial = 0; trial < count; ++trial, ++result.cases) {
    const std::size_t n = 1 + trial % max_n;
    const auto a = testing::random_normalized(n, rng, 3, 15);
    const auto joined = SymTropMatrix::from_function(n + 1, [&](std::size_t i, std::size_t j) {
      return i < n && j < n ? a(i, j) : TropScalar(0L);
    });
    if (pattern_graph(joined) != join_vertex(pattern_graph(a))) {
      fail(result, a, "pattern of the extension is not the join");
    } else if (exact_rank(joined) != exact_rank(a)) {
      fail(result, a, "joined rank " + show(exact_rank(joined)) + " differs from " + show(exact_rank(a)));
    }
  }
  return result;
}

SuiteResult induced_submatrix_suite(std::uint32_t seed, std::size_t count, std::size_t max_n) {
  std::mt19937 rng(seed);
  SuiteResult result;
  for (std::size_t trial = 0; trial < count; ++trial, ++result.cases) {
    const std::size_t n = 2 + trial % (max_n - 1);
    const auto a = testing::random_normalized(n, rng, 3, 15);
    std::vector<std::size_t> leading(1 + rng() % (n - 1));
    for (std::size_t i = 0; i < leading.size(); ++i) leading[i] = i;
    const auto whole = exact_rank(a);
    const auto part = exact_rank(a.submatrix(leading));
    if (!whole || !part) {
      fail(result, a, "search did not finish");
    } else if (*part > *whole) {
      fail(result, a, "leading block has rank " + show(part) + " above " + show(whole));
    }
  }
  return result;
}

SuiteResult theta_bound_suite(std::uint32_t seed, std::size_t exhaustive_n, std::size_t max_n,
                              std::size_t random_count) {
  std::mt19937 rng(seed);
  SuiteResult result;
  const auto check = [&](const PatternGraph& g) {
    ++result.cases;
    const std::size_t n = g.order();
    const auto a = generate_instance(g, rng());
    const auto bound = static_cast<std::size_t>(cp_rank_upper_bound(a));
    const std::size_t cap = std::max(n, n * n / 4);
    if (bound > cap) fail(result, a, "bound " + std::to_string(bound) + " above " + std::to_string(cap));
    // The canonical descending order is the best order for the formula.
    const auto best = min_theta_cover(g);
    std::vector<std::size_t> sizes;
    for (const auto& c : best.cover.cliques())
      if (c.size() >= 2) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    do {
      if (theta_formula(sizes, best.cover.l()) < best.theta) fail(result, a, "a reordering lowers theta");
    } while (std::next_permutation(sizes.begin(), sizes.end()));
  };
  for (std::size_t n = 1; n <= exhaustive_n; ++n)
    for (const auto& g : oracle::graphs_up_to_isomorphism(n)) check(g);
  for (std::size_t trial = 0; trial < random_count; ++trial) {
    const std::size_t n = exhaustive_n + 1 + trial % (max_n - exhaustive_n);
    check(testing::random_graph(n, rng, std::uniform_real_distribution<double>(0.1, 0.9)(rng)));
  }
  return result;
}

}  // namespace tropcp::checks
