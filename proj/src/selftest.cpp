// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/selftest.hpp"

#include <functional>

#include "tropcp/cp_analysis.hpp"
#include "tropcp/decomposition.hpp"
#include "tropcp/exact_rank.hpp"
#include "tropcp/matrix_io.hpp"
#include "tropcp/pattern_graphs.hpp"

namespace tropcp {
namespace {

constexpr const char* kRankOne = "3\n0 1 2\n1 2 3\n2 3 4\n";
constexpr const char* kRankTwo = "3\n0 1 1\n1 1 1\n1 1 1\n";
constexpr const char* kRankTwoNormalized = "3\n0 1/2 1/2\n1/2 0 0\n1/2 0 0\n";
constexpr const char* kPaw = "4\n0 0 0 2\n0 0 0 3\n0 0 0 0\n2 3 0 0\n";
constexpr const char* kCprk6 = "5\n0 1 1 3 3\n1 0 3 1 1\n1 3 0 1 1\n3 1 1 0 3\n3 1 1 3 0\n";
constexpr const char* kStar6 =
    "6\n0 1 1 3 3 0\n1 0 3 1 1 0\n1 3 0 1 1 0\n3 1 1 0 3 0\n3 1 1 3 0 0\n0 0 0 0 0 0\n";
constexpr const char* kBowtie = "5\n0 0 0 0 0\n0 0 0 1 2\n0 0 0 2 2\n0 1 2 0 0\n0 2 2 0 0\n";
constexpr const char* kPathP3 = "3\n0 0 5/2\n0 0 0\n5/2 0 0\n";

PatternGraph graph_of(std::size_t n, std::initializer_list<Edge> edges) {
  const std::vector<Edge> list(edges);
  return PatternGraph(n, list);
}

PatternGraph paw() { return graph_of(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
PatternGraph bowtie() { return graph_of(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

std::size_t exact_rank_of(const char* text) {
  const auto r = cp_rank_exact(parse_matrix(text), 12);
  return r.status == RankStatus::kExact ? r.rank : 0;
}

SymTropMatrix zero_one_empty(std::size_t n) {
  return SymTropMatrix::from_function(n, [](std::size_t i, std::size_t j) {
    return i == j ? TropScalar(0L) : TropScalar(1L);
  });
}

// Rows joined by " | " so the result fits on one report line.
std::string one_line(const SymTropMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (i) out += " | ";
    for (std::size_t j = 0; j < a.dimension(); ++j) out += (j ? " " : "") + a(i, j).to_string();
  }
  return out;
}

template <class T>
std::string str(T x) {
  return std::to_string(x);
}

struct Case {
  std::string name;
  std::string expected;
  std::function<std::string()> observe;
};

std::vector<Case> corpus() {
  std::vector<Case> cases;
  auto add = [&](std::string name, std::string expected, std::function<std::string()> f) {
    cases.push_back({std::move(name), std::move(expected), std::move(f)});
  };

  add("3x3 rank-one matrix A", "true", [] {
    const auto a = parse_matrix(kRankOne);
    return cp_rank_is_one(a) && rank_one_product(extract_rank_one_factor(a)) == a ? "true" : "false";
  });
  add("C(A) is the zero matrix", "true",
      [] { return normalize(parse_matrix(kRankOne)).matrix == SymTropMatrix::zero(3) ? "true" : "false"; });
  add("C(B) of the 3x3 rank-two matrix B", one_line(parse_matrix(kRankTwoNormalized)),
      [] { return one_line(normalize(parse_matrix(kRankTwo)).matrix); });
  add("rank-two matrix B exact rank", "2", [=] { return str(exact_rank_of(kRankTwo)); });
  add("paw theta of (K3, K1)", "2", [] { return str(theta(CliqueCover(paw(), {{0, 1, 2}, {3}}))); });
  add("paw theta of (2 K2)", "4", [] { return str(theta(CliqueCover(paw(), {{0, 1}, {2, 3}}))); });
  add("paw minimum theta", "2", [] { return str(min_theta_cover(paw()).theta); });
  add("paw matrix exact rank", "2", [=] { return str(exact_rank_of(kPaw)); });
  add("paw matrix construction size", "2",
      [] { return str(decompose(parse_matrix(kPaw)).rank()); });
  add("5x5 empty pattern refuted at r = 5", "refuted", [] {
    return to_string(cp_rank_leq(parse_matrix(kCprk6), 5).outcome);
  });
  add("5x5 empty pattern exact rank", "6", [=] { return str(exact_rank_of(kCprk6)); });
  for (std::size_t n : {3, 4, 5}) {
    add("0/1 empty pattern n=" + str(n) + " rank", str(n), [=] {
      const auto a = zero_one_empty(n);
      const auto exact = cp_rank_exact(a, n + 1);
      const bool agree = exact.status == RankStatus::kExact && exact.rank == zero_one_rank(a) &&
                         empty_pattern_01_decomposition(n).rank() == n;
      return agree ? str(exact.rank) : "disagree";
    });
  }
  add("cc(paw)", "2", [] { return str(edge_clique_cover_number(paw()).number); });
  add("cc(S6)", "5", [] { return str(edge_clique_cover_number(PatternGraph::star(5)).number); });
  add("cc(bowtie)", "2", [] { return str(edge_clique_cover_number(bowtie()).number); });
  add("cc(P3)", "2", [] { return str(edge_clique_cover_number(PatternGraph::path(3)).number); });
  for (std::size_t n = 2; n <= 8; ++n)
    add("cc(K" + str(n) + ")", "1",
        [=] { return str(edge_clique_cover_number(PatternGraph::complete(n)).number); });
  add("P3 matrix exact rank", "2", [=] { return str(exact_rank_of(kPathP3)); });
  add("bowtie matrix exact rank", "3", [=] { return str(exact_rank_of(kBowtie)); });
  add("S6 extension exact rank", "6", [=] { return str(exact_rank_of(kStar6)); });
  add("P4 endpoint witness exceeds cc", "true", [] {
    const auto g = PatternGraph::path(4);
    const auto r = cp_rank_exact(diameter_witness_matrix(g, 0, 3), 8);
    return r.status == RankStatus::kExact && r.rank > edge_clique_cover_number(g).number ? "true"
                                                                                         : "false";
  });
  return cases;
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
  std::vector<SelftestResult> results;
  for (const auto& c : corpus()) {
    SelftestResult r{c.name, c.expected, {}, false};
    try {
      r.observed = c.observe();
    } catch (const std::exception& e) {
      r.observed = std::string("error: ") + e.what();
    }
    r.passed = r.observed == r.expected;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace tropcp
