// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropcp/exact_rank.hpp"

namespace tropcp {

SymTropMatrix BlockPlan::relabel(const SymTropMatrix& a) const { return a.submatrix(order); }

std::size_t BlockPlan::clique_start(std::size_t i) const {
  std::size_t start = 0;
  for (std::size_t c = 0; c < i; ++c) start += clique_sizes[c];
  return start;
}

std::size_t BlockPlan::singleton_start() const { return clique_start(clique_sizes.size()); }

BlockPlan make_block_plan(const SymTropMatrix& a, const CliqueCover& cover) {
  if (!is_normalized(a)) throw NotNormalized("block construction needs a normalized matrix");
  const PatternGraph g = pattern_graph(a);
  if (cover.order() != g.order())
    throw std::invalid_argument("cover has the wrong number of vertices");
  const CliqueCover checked(g, cover.cliques());
  CliqueCover partition = checked.is_partition() ? checked : to_partition(g, checked);

  std::vector<std::size_t> order;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> singles;
  for (const auto& clique : partition.cliques()) {
    if (clique.size() >= 2) {
      sizes.push_back(clique.size());
      order.insert(order.end(), clique.begin(), clique.end());
    } else {
      singles.push_back(clique.front());
    }
  }
  std::sort(singles.begin(), singles.end());
  if (singles.size() == 3) {
    // Put the lexicographically last pair with the largest entry at the end.
    std::size_t best_p = 0;
    std::size_t best_q = 1;
    for (std::size_t p = 0; p < 3; ++p)
      for (std::size_t q = p + 1; q < 3; ++q)
        if (a(singles[p], singles[q]) >= a(singles[best_p], singles[best_q])) {
          best_p = p;
          best_q = q;
        }
    const std::size_t other = 3 - best_p - best_q;
    singles = {singles[other], singles[best_p], singles[best_q]};
  }
  order.insert(order.end(), singles.begin(), singles.end());

  const std::size_t k = sizes.size();
  const std::size_t l = singles.size();
  BlockCounts planned;
  planned.a1 = k;
  for (std::size_t i = 0; i < k; ++i) planned.a2 += i * sizes[i];
  planned.a3 = k * l;
  planned.a4 = l * l / 4;
  return BlockPlan{std::move(partition), std::move(order), std::move(sizes), l, planned};
}

std::vector<TropVector> build_block_A1(const SymTropMatrix& relabeled, const BlockPlan& plan) {
  const std::size_t n = relabeled.dimension();
  std::vector<TropVector> out;
  for (std::size_t i = 0; i < plan.clique_sizes.size(); ++i) {
    std::vector<TropScalar> x(n);
    const std::size_t start = plan.clique_start(i);
    for (std::size_t p = start; p < start + plan.clique_sizes[i]; ++p) x[p] = 0L;
    out.emplace_back(std::move(x));
  }
  return out;
}

std::vector<TropVector> build_block_A2(const SymTropMatrix& relabeled, const BlockPlan& plan) {
  const std::size_t n = relabeled.dimension();
  std::vector<TropVector> out;
  const std::size_t k = plan.clique_sizes.size();
  for (std::size_t j = 1; j < k; ++j) {
    const std::size_t j_start = plan.clique_start(j);
    for (std::size_t i = 0; i < j; ++i) {
      const std::size_t i_start = plan.clique_start(i);
      for (std::size_t s = j_start; s < j_start + plan.clique_sizes[j]; ++s) {
        std::vector<TropScalar> y(n);
        y[s] = 0L;
        for (std::size_t t = i_start; t < i_start + plan.clique_sizes[i]; ++t) y[t] = relabeled(t, s);
        out.emplace_back(std::move(y));
      }
    }
  }
  return out;
}

std::vector<TropVector> build_block_A3(const SymTropMatrix& relabeled, const BlockPlan& plan) {
  const std::size_t n = relabeled.dimension();
  std::vector<TropVector> out;
  const std::size_t first_single = plan.singleton_start();
  for (std::size_t i = 0; i < plan.clique_sizes.size(); ++i) {
    const std::size_t i_start = plan.clique_start(i);
    for (std::size_t j = first_single; j < n; ++j) {
      std::vector<TropScalar> z(n);
      z[j] = 0L;
      for (std::size_t t = i_start; t < i_start + plan.clique_sizes[i]; ++t) z[t] = relabeled(t, j);
      out.emplace_back(std::move(z));
    }
  }
  return out;
}

namespace {

TropVector entrywise_min(const TropVector& u, const TropVector& v) {
  std::vector<TropScalar> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = trop_add(u[i], v[i]);
  return TropVector(std::move(w));
}

// One factor per finite singleton pair, merged while the merge still
// dominates A. A merged factor undercuts neither original, so the sum is
// unchanged.
std::vector<TropVector> pairwise_fallback(const SymTropMatrix& relabeled, std::size_t first,
                                          bool cover_diagonal) {
  const std::size_t n = relabeled.dimension();
  std::vector<bool> has_zero(n, false);
  std::vector<TropVector> factors;
  for (std::size_t i = first; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (relabeled(i, j).is_infinite()) continue;
      std::size_t zero_at = i;
      std::size_t other = j;
      if (cover_diagonal && has_zero[i] && !has_zero[j]) std::swap(zero_at, other);
      has_zero[zero_at] = true;
      if (relabeled(i, j).is_zero()) has_zero[other] = true;
      std::vector<TropScalar> b(n);
      b[zero_at] = 0L;
      b[other] = relabeled(i, j);
      factors.emplace_back(std::move(b));
    }
  }

  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < factors.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < factors.size() && !merged; ++j) {
        TropVector w = entrywise_min(factors[i], factors[j]);
        if (!outer_product_dominates(w, relabeled)) continue;
        factors[i] = std::move(w);
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
      }
    }
  }

  if (cover_diagonal) {
    for (std::size_t i = first; i < n; ++i) {
      if (has_zero[i]) continue;
      std::vector<TropScalar> e(n);
      e[i] = 0L;
      factors.emplace_back(std::move(e));
    }
  }
  return factors;
}

}  // namespace

SingletonBlock build_block_A4(const SymTropMatrix& relabeled, const BlockPlan& plan,
                              std::uint64_t search_node_budget) {
  SingletonBlock block;
  const std::size_t n = relabeled.dimension();
  const std::size_t l = plan.singletons;
  const std::size_t s = plan.singleton_start();
  const bool has_cliques = !plan.clique_sizes.empty();
  if (l == 0 || (has_cliques && l == 1)) return block;

  if (has_cliques && l == 2 && relabeled(s, s + 1).is_finite()) {
    std::vector<TropScalar> b(n);
    b[s] = 0L;
    b[s + 1] = relabeled(s, s + 1);
    block.factors.emplace_back(std::move(b));
    return block;
  }
  if (has_cliques && l == 3 && relabeled(s, s + 1).is_finite() && relabeled(s, s + 2).is_finite() &&
      relabeled(s + 1, s + 2).is_finite()) {
    std::vector<TropScalar> x(n);
    x[s] = 0L;
    x[s + 1] = relabeled(s, s + 1);
    std::vector<TropScalar> y(n);
    y[s] = relabeled(s, s + 2);
    y[s + 1] = relabeled(s + 1, s + 2);
    y[s + 2] = 0L;
    block.factors.emplace_back(std::move(x));
    block.factors.emplace_back(std::move(y));
    return block;
  }

  block.used_fallback = true;
  block.factors = pairwise_fallback(relabeled, s, !has_cliques);
  if (search_node_budget == 0 || (has_cliques && l < 4)) return block;

  std::vector<std::size_t> positions(l);
  for (std::size_t i = 0; i < l; ++i) positions[i] = s + i;
  const SymTropMatrix singles = relabeled.submatrix(positions);
  const bool edgeless = !pattern_graph(singles).has_edges();
  const std::size_t target = (!has_cliques && edgeless && l <= 4) ? l : l * l / 4;
  if (target == 0 || target >= block.factors.size()) return block;

  SearchLimits limits;
  limits.node_limit = search_node_budget;
  limits.time_limit_seconds = 30.0;
  limits.threads = 1;
  const LeqResult found = cp_rank_leq(singles, target, limits);
  if (found.outcome != SearchOutcome::kFound) return block;
  std::vector<TropVector> embedded;
  for (const auto& f : found.decomposition->factors()) {
    std::vector<TropScalar> b(n);
    for (std::size_t i = 0; i < l; ++i) b[s + i] = f[i];
    embedded.emplace_back(std::move(b));
  }
  if (embedded.size() < block.factors.size()) {
    block.factors = std::move(embedded);
    block.used_search = true;
  }
  return block;
}

Construction construct_with_details(const SymTropMatrix& a, const CliqueCover& cover,
                                    std::uint64_t search_node_budget) {
  BlockPlan plan = make_block_plan(a, cover);
  const SymTropMatrix relabeled = plan.relabel(a);
  auto a1 = build_block_A1(relabeled, plan);
  auto a2 = build_block_A2(relabeled, plan);
  auto a3 = build_block_A3(relabeled, plan);
  auto a4 = build_block_A4(relabeled, plan, search_node_budget);
  const BlockCounts achieved{a1.size(), a2.size(), a3.size(), a4.factors.size()};

  std::vector<TropVector> factors;
  for (auto* block : {&a1, &a2, &a3, &a4.factors}) {
    for (const auto& f : *block) {
      std::vector<TropScalar> original(f.size());
      for (std::size_t p = 0; p < f.size(); ++p) original[plan.order[p]] = f[p];
      factors.emplace_back(std::move(original));
    }
  }
  return Construction{Decomposition(a, std::move(factors)), std::move(plan), achieved,
                      a4.used_fallback, a4.used_search};
}

Decomposition construct_decomposition(const SymTropMatrix& a, const CliqueCover& cover) {
  return construct_with_details(a, cover).decomposition;
}

Decomposition decompose(const SymTropMatrix& a) {
  const auto [normalized, record] = normalize(a);
  if (normalized.dimension() == 0)
    return Decomposition(a, {TropVector::all_infinite(a.dimension())});
  const auto best = min_theta_cover(pattern_graph(normalized));
  return record.lift(construct_decomposition(normalized, best.cover));
}

Decomposition empty_pattern_01_decomposition(std::size_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  std::vector<TropVector> factors;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<TropScalar> v(n, TropScalar(1L));
    v[i] = 0L;
    factors.emplace_back(std::move(v));
  }
  auto target = SymTropMatrix::from_function(
      n, [](std::size_t i, std::size_t j) { return i == j ? TropScalar(0L) : TropScalar(1L); });
  return Decomposition(std::move(target), std::move(factors));
}

}  // namespace tropcp
