// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Shared fixtures and random generators for the test binaries.

#ifndef TROPCP_TESTS_SUPPORT_HPP
#define TROPCP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tropcp/generate.hpp"
#include "tropcp/matrix_io.hpp"
#include "tropcp/pattern_graphs.hpp"
#include "tropcp/trop_core.hpp"

namespace tropcp::testing {

/// Matrix from row strings in the file token grammar.
inline SymTropMatrix rows(std::initializer_list<std::string_view> lines) {
  std::string text = std::to_string(lines.size()) + "\n";
  for (auto line : lines) (text += line) += '\n';
  return parse_matrix(text);
}

inline TropVector vec(std::initializer_list<std::string_view> tokens) {
  std::vector<TropScalar> out;
  for (auto t : tokens) out.push_back(parse_scalar(t));
  return TropVector(std::move(out));
}

inline PatternGraph graph(std::size_t n, std::initializer_list<Edge> edges) {
  const std::vector<Edge> list(edges);
  return PatternGraph(n, list);
}

// 0-based labels throughout.
inline PatternGraph paw() { return graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
inline PatternGraph bowtie() { return graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline const SymTropMatrix& cprk6_matrix() {
  static const SymTropMatrix a = rows(
      {"0 1 1 3 3", "1 0 3 1 1", "1 3 0 1 1", "3 1 1 0 3", "3 1 1 3 0"});
  return a;
}

inline const SymTropMatrix& bowtie_matrix() {
  static const SymTropMatrix a = rows(
      {"0 0 0 0 0", "0 0 0 1 2", "0 0 0 2 2", "0 1 2 0 0", "0 2 2 0 0"});
  return a;
}

inline PatternGraph random_graph(std::size_t n, std::mt19937& rng, double edge_probability = 0.5) {
  std::bernoulli_distribution coin(edge_probability);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return PatternGraph(n, edges);
}

/// Normalized CP matrix with a random pattern and integer entries in
/// 1..max_entry off the pattern, ∞ with the given percent chance.
inline SymTropMatrix random_normalized(std::size_t n, std::mt19937& rng, std::uint32_t max_entry = 3,
                                       std::uint32_t infinity_percent = 0) {
  const auto g = random_graph(n, rng);
  EntryRange range;
  range.max_numerator = max_entry;
  range.infinity_percent = infinity_percent;
  return generate_instance(g, rng(), range);
}

/// A CP matrix that is not normalized: a normalized core with random
/// diagonal shifts, and sometimes an extra row with an infinite diagonal.
inline SymTropMatrix random_cp(std::size_t n, std::mt19937& rng, std::uint32_t max_entry = 3) {
  const auto core = random_normalized(n, rng, max_entry, 10);
  std::uniform_int_distribution<int> shift(-3, 3);
  std::vector<Rational> d(n);
  for (auto& x : d) x = shift(rng);
  const bool add_dead_row = std::bernoulli_distribution(0.25)(rng);
  const std::size_t m = n + (add_dead_row ? 1 : 0);
  return SymTropMatrix::from_function(m, [&](std::size_t i, std::size_t j) -> TropScalar {
    if (i >= n || j >= n) return TropScalar::infinity();
    if (core(i, j).is_infinite()) return TropScalar::infinity();
    return Rational(core(i, j).value() + (d[i] + d[j]) / 2);
  });
}

/// A clique partition built by peeling cliques off a random vertex order,
/// each later vertex joining with probability join_probability.
inline CliqueCover random_partition_cover(const PatternGraph& g, std::mt19937& rng,
                                          double join_probability = 0.7) {
  const std::size_t n = g.order();
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution join(join_probability);
  std::vector<std::vector<std::size_t>> cliques;
  VertexSet used = 0;
  for (std::size_t v : order) {
    if (used >> v & 1) continue;
    std::vector<std::size_t> clique{v};
    used |= singleton(v);
    for (std::size_t w : order) {
      if (used >> w & 1 || !join(rng)) continue;
      bool fits = true;
      for (std::size_t x : clique) fits = fits && g.adjacent(x, w);
      if (!fits) continue;
      clique.push_back(w);
      used |= singleton(w);
    }
    cliques.push_back(std::move(clique));
  }
  return CliqueCover(g, cliques);
}

}  // namespace tropcp::testing

#endif  // TROPCP_TESTS_SUPPORT_HPP
