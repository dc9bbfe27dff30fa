// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <gtest/gtest.h>

#include "oracle/brute_force.hpp"
#include "support.hpp"
#include "tropcp/cp_analysis.hpp"
#include "tropcp/decomposition.hpp"
#include "tropcp/exact_rank.hpp"

namespace tropcp {
namespace {

using testing::graph;
using testing::paw;
using testing::rows;
using testing::vec;

const SymTropMatrix kPaw = rows({"0 0 0 2", "0 0 0 3", "0 0 0 0", "2 3 0 0"});

std::size_t zero_count(const TropVector& b) {
  return static_cast<std::size_t>(std::count_if(b.begin(), b.end(), [](const auto& x) { return x.is_zero(); }));
}

TEST(BlockPlan, CliquesAreConsecutiveAndSingletonsLast) {
  // Cover {2,3} and {0}, {1}: the clique moves to the front.
  const auto a = rows({"0 1 1 1", "1 0 1 1", "1 1 0 0", "1 1 0 0"});
  const auto plan = make_block_plan(a, CliqueCover(pattern_graph(a), {{0}, {1}, {2, 3}}));
  EXPECT_EQ(plan.order, (std::vector<std::size_t>{2, 3, 0, 1}));
  EXPECT_EQ(plan.clique_sizes, (std::vector<std::size_t>{2}));
  EXPECT_EQ(plan.singletons, 2U);
  EXPECT_EQ(plan.planned, (BlockCounts{1, 0, 2, 1}));
  EXPECT_EQ(plan.singleton_start(), 2U);
}

TEST(BlockPlan, ThreeSingletonsPutTheLargestPairLast) {
  // a_01 = 3 is the largest, so vertex 2 moves to the front.
  const auto a = rows({"0 3 1", "3 0 2", "1 2 0"});
  const auto plan = make_block_plan(a, CliqueCover(pattern_graph(a), {{0}, {1}, {2}}));
  EXPECT_EQ(plan.order, (std::vector<std::size_t>{2, 0, 1}));
}

TEST(BlockPlan, TiesGoToTheLexicographicallyLastPair) {
  const auto a = rows({"0 2 2", "2 0 2", "2 2 0"});
  const auto plan = make_block_plan(a, CliqueCover(pattern_graph(a), {{0}, {1}, {2}}));
  EXPECT_EQ(plan.order, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(BlockPlan, RejectsCoversOfAnotherGraph) {
  EXPECT_THROW((void)make_block_plan(kPaw, CliqueCover(PatternGraph::complete(4), {{0, 1, 2, 3}})),
               std::invalid_argument);
  EXPECT_THROW((void)make_block_plan(rows({"1"}), CliqueCover(PatternGraph(1), {{0}})), NotNormalized);
}

TEST(BuildBlocks, PawWithTriangleAndSingleton) {
  const auto plan = make_block_plan(kPaw, CliqueCover(paw(), {{0, 1, 2}, {3}}));
  const auto r = plan.relabel(kPaw);
  EXPECT_EQ(build_block_A1(r, plan), (std::vector<TropVector>{vec({"0", "0", "0", "inf"})}));
  EXPECT_TRUE(build_block_A2(r, plan).empty());
  EXPECT_EQ(build_block_A3(r, plan), (std::vector<TropVector>{vec({"2", "3", "0", "0"})}));
  EXPECT_TRUE(build_block_A4(r, plan).factors.empty());
}

TEST(BuildBlocks, TwoPairsOfSizeTwo) {
  const auto a = rows({"0 0 1 2", "0 0 3 4", "1 3 0 0", "2 4 0 0"});
  const auto plan = make_block_plan(a, CliqueCover(pattern_graph(a), {{0, 1}, {2, 3}}));
  const auto r = plan.relabel(a);
  EXPECT_EQ(build_block_A1(r, plan),
            (std::vector<TropVector>{vec({"0", "0", "inf", "inf"}), vec({"inf", "inf", "0", "0"})}));
  // y(1,2,s) for s = 3, 4: column s of A over the first clique.
  EXPECT_EQ(build_block_A2(r, plan),
            (std::vector<TropVector>{vec({"1", "3", "0", "inf"}), vec({"2", "4", "inf", "0"})}));
}

TEST(BuildBlocks, ClosedFormsForTwoAndThreeSingletons) {
  const auto two = rows({"0 0 1 2", "0 0 3 4", "1 3 0 5", "2 4 5 0"});
  auto plan = make_block_plan(two, CliqueCover(pattern_graph(two), {{0, 1}, {2}, {3}}));
  auto block = build_block_A4(plan.relabel(two), plan);
  EXPECT_FALSE(block.used_fallback);
  EXPECT_EQ(block.factors, (std::vector<TropVector>{vec({"inf", "inf", "0", "5"})}));

  const auto three = rows({"0 1 1 1", "1 0 2 1", "1 2 0 3", "1 1 3 0"});
  plan = make_block_plan(three, CliqueCover(pattern_graph(three), {{0}, {1}, {2}, {3}}));
  // k = 0 here, so the closed form does not apply.
  EXPECT_TRUE(build_block_A4(plan.relabel(three), plan).used_fallback);

  const auto with_clique = rows({"0 0 4 4 4", "0 0 4 4 4", "4 4 0 1 3", "4 4 1 0 2", "4 4 3 2 0"});
  plan = make_block_plan(with_clique, CliqueCover(pattern_graph(with_clique), {{0, 1}, {2}, {3}, {4}}));
  // Largest singleton entry a_{3,5} = 3 ends up last: order 3 (vertex 4), 2, 4.
  EXPECT_EQ(plan.order, (std::vector<std::size_t>{0, 1, 3, 2, 4}));
  block = build_block_A4(plan.relabel(with_clique), plan);
  EXPECT_FALSE(block.used_fallback);
  EXPECT_EQ(block.factors, (std::vector<TropVector>{vec({"inf", "inf", "0", "1", "inf"}),
                                                    vec({"inf", "inf", "2", "3", "0"})}));
}

TEST(ConstructDecomposition, WorkedExamples) {
  const auto paw_built = construct_with_details(kPaw, CliqueCover(paw(), {{0, 1, 2}, {3}}));
  EXPECT_EQ(paw_built.decomposition.rank(), 2U);
  EXPECT_EQ(paw_built.decomposition.factors(),
            (std::vector<TropVector>{vec({"0", "0", "0", "inf"}), vec({"2", "3", "0", "0"})}));

  const auto kn = construct_decomposition(SymTropMatrix::zero(5),
                                          CliqueCover(PatternGraph::complete(5), {{0, 1, 2, 3, 4}}));
  EXPECT_EQ(kn.factors(), (std::vector<TropVector>{vec({"0", "0", "0", "0", "0"})}));

  const auto& c6 = testing::cprk6_matrix();
  const CliqueCover singles(PatternGraph(5), {{0}, {1}, {2}, {3}, {4}});
  const auto no_search = construct_with_details(c6, singles, 0);
  EXPECT_LE(no_search.decomposition.rank(), 10U);
  EXPECT_TRUE(no_search.used_fallback);
  const auto searched = construct_with_details(c6, singles);
  EXPECT_EQ(searched.decomposition.rank(), 6U);
  EXPECT_TRUE(searched.used_search);
}

TEST(ConstructDecomposition, EmptySmallPatternsGetExactlyNFactors) {
  std::mt19937 rng(5);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = generate_instance(PatternGraph(n), rng(), EntryRange{4, 2, 0});
      std::vector<std::vector<std::size_t>> cliques;
      for (std::size_t v = 0; v < n; ++v) cliques.push_back({v});
      EXPECT_EQ(construct_decomposition(a, CliqueCover(PatternGraph(n), cliques)).rank(), n);
    }
  }
}

TEST(ConstructDecomposition, OverlappingCoversAreReducedToPartitions) {
  const auto a = rows({"0 0 0 0 0", "0 0 0 1 2", "0 0 0 2 2", "0 1 2 0 0", "0 2 2 0 0"});
  const auto built = construct_with_details(a, CliqueCover(testing::bowtie(), {{0, 1, 2}, {0, 3, 4}}));
  EXPECT_TRUE(built.plan.cover.is_partition());
  EXPECT_TRUE(built.decomposition.verify());
}

TEST(ConstructDecomposition, ObeysTheBlockBoundsOnRandomCovers) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto a = testing::random_normalized(n, rng, 5, 10);
    const auto g = pattern_graph(a);
    const auto cover = testing::random_partition_cover(g, rng);
    const auto built = construct_with_details(a, cover);
    const auto& d = built.decomposition;
    ASSERT_TRUE(d.verify());
    const std::size_t l = cover.l();
    const auto plan = built.plan.planned;
    EXPECT_EQ(built.achieved.a1, plan.a1);
    EXPECT_EQ(built.achieved.a2, plan.a2);
    EXPECT_EQ(built.achieved.a3, plan.a3);
    EXPECT_LE(d.rank(), plan.a1 + plan.a2 + plan.a3 + std::max(l * (l - (l > 0)) / 2, l));
    if (cover.k() > 0 && l <= 3) EXPECT_LE(d.rank(), static_cast<std::size_t>(theta(cover)));
    for (const auto& b : d.factors()) {
      EXPECT_TRUE(outer_product_dominates(b, a));
      VertexSet zeros = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (b[i].is_zero()) zeros |= singleton(i);
      EXPECT_TRUE(g.is_clique(zeros));
    }
  }
}

TEST(Decompose, LiftsBackToTheOriginalMatrix) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_cp(2 + trial % 4, rng);
    const auto d = decompose(a);
    EXPECT_EQ(d.target(), a);
    EXPECT_TRUE(d.verify());
  }
  EXPECT_EQ(decompose(SymTropMatrix::all_infinite(2)).rank(), 1U);
  EXPECT_THROW((void)decompose(rows({"0 -1", "-1 0"})), NotCompletelyPositive);
}

TEST(EmptyPattern01, WorkedExamples) {
  const auto three = empty_pattern_01_decomposition(3);
  EXPECT_EQ(three.factors(), (std::vector<TropVector>{vec({"0", "1", "1"}), vec({"1", "0", "1"}),
                                                      vec({"1", "1", "0"})}));
  EXPECT_EQ(empty_pattern_01_decomposition(1).factors(), (std::vector<TropVector>{vec({"0"})}));
  EXPECT_TRUE(empty_pattern_01_decomposition(4).verify());
  EXPECT_THROW((void)empty_pattern_01_decomposition(0), std::invalid_argument);
}

TEST(EmptyPattern01, NoSmallerDecompositionExists) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto d = empty_pattern_01_decomposition(n);
    EXPECT_EQ(d.rank(), n);
    EXPECT_EQ(*oracle::cp_rank(d.target()), n);
    if (n > 1) EXPECT_EQ(cp_rank_leq(d.target(), n - 1).outcome, SearchOutcome::kRefuted);
    for (const auto& b : d.factors()) EXPECT_EQ(zero_count(b), 1U);
  }
}

}  // namespace
}  // namespace tropcp
