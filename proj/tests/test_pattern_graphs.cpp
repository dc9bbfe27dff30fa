// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracle/brute_force.hpp"
#include "support.hpp"
#include "tropcp/cp_analysis.hpp"
#include "tropcp/pattern_graphs.hpp"

namespace tropcp {
namespace {

using testing::bowtie;
using testing::graph;
using testing::paw;
using testing::rows;

TEST(PatternGraph, RejectsLoopsAndOutOfRangeEdges) {
  EXPECT_THROW(graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_EQ(graph(3, {{0, 1}, {1, 0}}).edge_count(), 1U);
}

TEST(PatternGraph, ReadsZerosOffTheDiagonal) {
  const auto cb = rows({"0 1/2 1/2", "1/2 0 0", "1/2 0 0"});
  // The only off-diagonal zero is at (2, 3); vertex 1 is isolated.
  EXPECT_EQ(pattern_graph(cb), graph(3, {{1, 2}}));
  EXPECT_FALSE(pattern_graph(testing::cprk6_matrix()).has_edges());
  EXPECT_EQ(pattern_graph(SymTropMatrix::zero(4)), PatternGraph::complete(4));
  // ∞ is not zero.
  EXPECT_FALSE(pattern_graph(rows({"0 inf", "inf 0"})).has_edges());
}

TEST(Diameter, SmallFamilies) {
  EXPECT_EQ(diameter(PatternGraph::path(4)), 3);
  EXPECT_EQ(diameter(PatternGraph::star(5)), 2);
  EXPECT_EQ(diameter(PatternGraph::complete(6)), 1);
  EXPECT_EQ(diameter(PatternGraph(1)), 0);
  EXPECT_EQ(diameter(graph(3, {{0, 1}})), kUnreachable);
}

TEST(Diameter, AgreesWithFloydWarshall) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::graphs_up_to_isomorphism(n)) {
      const int expected = oracle::diameter(g);
      EXPECT_EQ(diameter(g), expected < 0 ? kUnreachable : expected) << render_graph(g);
    }
  }
}

TEST(InducedSubgraph, WorkedExamples) {
  const std::vector<std::size_t> triangle{0, 1, 2};
  EXPECT_EQ(induced_subgraph(paw(), triangle), PatternGraph::complete(3));
  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_EQ(induced_subgraph(paw(), all), paw());
  // star(5) puts the centre last.
  const std::vector<std::size_t> leaves{0, 1, 2, 3, 4};
  EXPECT_EQ(induced_subgraph(PatternGraph::star(5), leaves), PatternGraph(5));
  const std::vector<std::size_t> repeated{0, 0};
  EXPECT_THROW((void)induced_subgraph(paw(), repeated), std::invalid_argument);
}

TEST(JoinVertex, WorkedExamples) {
  EXPECT_EQ(join_vertex(PatternGraph(5)), PatternGraph::star(5));
  EXPECT_EQ(join_vertex(PatternGraph::complete(4)), PatternGraph::complete(5));
  EXPECT_EQ(join_vertex(PatternGraph(1)), PatternGraph::complete(2));
}

TEST(CliqueCover, ValidatesAndSortsCanonically) {
  const CliqueCover c(paw(), {{3}, {2, 1, 0}});
  EXPECT_EQ(c.cliques(), (std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}}));
  EXPECT_EQ(c.k(), 1U);
  EXPECT_EQ(c.l(), 1U);
  EXPECT_TRUE(c.is_partition());
  EXPECT_THROW(CliqueCover(paw(), {{0, 3}, {1, 2}}), std::invalid_argument);  // not a clique
  EXPECT_THROW(CliqueCover(paw(), {{0, 1, 2}}), std::invalid_argument);       // misses 3
  EXPECT_THROW(CliqueCover(paw(), {{0, 1, 2}, {}, {3}}), std::invalid_argument);
}

TEST(Theta, WorkedExamples) {
  EXPECT_EQ(theta(CliqueCover(paw(), {{0, 1, 2}, {3}})), 2);
  EXPECT_EQ(theta(CliqueCover(paw(), {{0, 1}, {2, 3}})), 4);
  EXPECT_EQ(theta(CliqueCover(PatternGraph::complete(5), {{0, 1, 2, 3, 4}})), 1);
  EXPECT_EQ(theta(CliqueCover(PatternGraph(5), {{0}, {1}, {2}, {3}, {4}})), 6);
}

TEST(Theta, FormulaTerms) {
  const std::vector<std::size_t> sizes{3, 2};
  // k = 2, Σ(i-1)q_i = 2, k·l = 6, ⌊9/4⌋ = 2.
  EXPECT_EQ(theta_formula(sizes, 3), 2 + 2 + 6 + 2);
}

TEST(MinThetaCover, WorkedExamples) {
  const auto best = min_theta_cover(paw());
  EXPECT_EQ(best.theta, 2);
  EXPECT_EQ(best.cover.cliques(), (std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3}}));
  EXPECT_EQ(min_theta_cover(PatternGraph::complete(6)).theta, 1);
  EXPECT_EQ(min_theta_cover(PatternGraph(5)).theta, 6);
}

TEST(MinThetaCover, MatchesEveryCoverIncludingOverlapping) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : oracle::graphs_up_to_isomorphism(n))
      EXPECT_EQ(min_theta_cover(g).theta, oracle::min_theta_any_cover(g)) << render_graph(g);
}

TEST(MinThetaCover, IsAPartitionOfValidCliques) {
  for (const auto& g : oracle::graphs_up_to_isomorphism(5)) {
    const auto best = min_theta_cover(g);
    EXPECT_TRUE(best.cover.is_partition());
    EXPECT_EQ(theta(best.cover), best.theta);
  }
}

TEST(ToPartition, NeverRaisesTheta) {
  const CliqueCover overlapping(bowtie(), {{0, 1, 2}, {0, 3, 4}});
  const CliqueCover partition = to_partition(bowtie(), overlapping);
  EXPECT_TRUE(partition.is_partition());
  EXPECT_LE(theta(partition), theta(overlapping));
  EXPECT_EQ(partition.cliques(), (std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4}}));
}

TEST(MinVertexCliqueCover, AgreesWithColouringTheComplement) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : oracle::graphs_up_to_isomorphism(n))
      ASSERT_EQ(min_vertex_clique_cover_size(g), oracle::min_vertex_clique_cover(g)) << render_graph(g);
}

TEST(EdgeCliqueCover, WorkedExamples) {
  EXPECT_EQ(edge_clique_cover_number(paw()).number, 2U);
  EXPECT_EQ(edge_clique_cover_number(PatternGraph::star(5)).number, 5U);
  EXPECT_EQ(edge_clique_cover_number(bowtie()).number, 2U);
  EXPECT_EQ(edge_clique_cover_number(PatternGraph::path(3)).number, 2U);
  for (std::size_t n = 2; n <= 8; ++n)
    EXPECT_EQ(edge_clique_cover_number(PatternGraph::complete(n)).number, 1U);
  EXPECT_EQ(edge_clique_cover_number(PatternGraph(4)).number, 0U);
}

TEST(EdgeCliqueCover, AgreesWithIterativeDeepeningOracle) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : oracle::graphs_up_to_isomorphism(n)) {
      const auto got = edge_clique_cover_number(g);
      ASSERT_EQ(got.number, oracle::edge_clique_cover_number(g)) << render_graph(g);
      EXPECT_EQ(got.cover.size(), got.number);
      // The returned cover re-validates.
      EXPECT_NO_THROW(EdgeCliqueCover(g, got.cover.cliques()));
    }
  }
}

TEST(EdgeCliqueCover, TriangleFreeGraphsNeedOneCliquePerEdge) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : oracle::graphs_up_to_isomorphism(n)) {
      bool triangle = false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          for (std::size_t c = b + 1; c < n; ++c)
            triangle |= g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
      if (!triangle) EXPECT_EQ(edge_clique_cover_number(g).number, g.edge_count());
    }
  }
}

TEST(CpRankUpperBound, WorkedExamples) {
  EXPECT_EQ(cp_rank_upper_bound(rows({"0 0 0 2", "0 0 0 3", "0 0 0 0", "2 3 0 0"})), 2);
  EXPECT_EQ(cp_rank_upper_bound(rows({"0 1 1", "1 0 1", "1 1 0"})), 3);
  EXPECT_EQ(cp_rank_upper_bound(testing::cprk6_matrix()), 6);
  EXPECT_THROW((void)cp_rank_upper_bound(rows({"1 1", "1 1"})), NotNormalized);
}

TEST(DiameterWitnessMatrix, PathOnFourVertices) {
  const auto w = diameter_witness_matrix(PatternGraph::path(4), 0, 3);
  EXPECT_EQ(w, rows({"0 0 2 1", "0 0 0 2", "2 0 0 0", "1 2 0 0"}));
  EXPECT_TRUE(is_completely_positive(w));
  EXPECT_EQ(pattern_graph(w), PatternGraph::path(4));
}

TEST(DiameterWitnessMatrix, RejectsBadPairs) {
  EXPECT_THROW((void)diameter_witness_matrix(PatternGraph::path(4), 1, 1), std::invalid_argument);
  EXPECT_THROW((void)diameter_witness_matrix(PatternGraph::path(4), 0, 1), std::invalid_argument);
  EXPECT_THROW((void)diameter_witness_matrix(PatternGraph::path(4), 0, 4), std::invalid_argument);
}

TEST(DiameterWitnessMatrix, KeepsThePatternForEveryNonAdjacentPair) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& g : oracle::graphs_up_to_isomorphism(n))
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
          if (!g.adjacent(u, v)) EXPECT_EQ(pattern_graph(diameter_witness_matrix(g, u, v)), g);
}

}  // namespace
}  // namespace tropcp
