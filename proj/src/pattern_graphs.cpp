// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/pattern_graphs.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

#include "tropcp/cp_analysis.hpp"

namespace tropcp {

namespace {

std::size_t lowest(VertexSet s) { return static_cast<std::size_t>(std::countr_zero(s)); }
std::size_t count(VertexSet s) { return static_cast<std::size_t>(std::popcount(s)); }

void check_vertex(const PatternGraph& g, std::size_t v) {
  if (v >= g.order())
    throw std::invalid_argument("vertex " + std::to_string(v + 1) + " is out of range");
}

// Maximal cliques of the subgraph induced on `candidates`, extending `base`.
void bron_kerbosch(const PatternGraph& g, VertexSet base, VertexSet candidates, VertexSet excluded,
                   std::vector<VertexSet>& out) {
  if (candidates == 0 && excluded == 0) {
    out.push_back(base);
    return;
  }
  std::size_t pivot = lowest(candidates | excluded);
  std::size_t pivot_degree = 0;
  for (VertexSet rest = candidates | excluded; rest != 0; rest &= rest - 1) {
    const std::size_t u = lowest(rest);
    const std::size_t d = count(candidates & g.neighbors(u));
    if (d > pivot_degree) {
      pivot = u;
      pivot_degree = d;
    }
  }
  for (VertexSet branch = candidates & ~g.neighbors(pivot); branch != 0; branch &= branch - 1) {
    const std::size_t v = lowest(branch);
    const VertexSet nv = g.neighbors(v);
    bron_kerbosch(g, base | singleton(v), candidates & nv, excluded & nv, out);
    candidates &= ~singleton(v);
    excluded |= singleton(v);
  }
}

// Every clique inside `candidates` (including the empty one), each OR'd with base.
void cliques_within(const PatternGraph& g, VertexSet base, VertexSet candidates,
                    std::vector<VertexSet>& out) {
  out.push_back(base);
  for (VertexSet rest = candidates; rest != 0; rest &= rest - 1) {
    const std::size_t w = lowest(rest);
    const VertexSet later = rest & ~singleton(w);
    cliques_within(g, base | singleton(w), later & g.neighbors(w), out);
  }
}

std::vector<std::vector<std::size_t>> canonical_list(std::span<const VertexSet> sets) {
  std::vector<std::vector<std::size_t>> list;
  list.reserve(sets.size());
  for (VertexSet s : sets) list.push_back(members(s));
  std::sort(list.begin(), list.end(), clique_less);
  return list;
}

bool list_less(const std::vector<std::vector<std::size_t>>& a,
               const std::vector<std::vector<std::size_t>>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), clique_less);
}

long long theta_of_blocks(std::span<const VertexSet> blocks) {
  std::vector<std::size_t> sizes;
  std::size_t singletons = 0;
  for (VertexSet b : blocks) {
    if (count(b) >= 2)
      sizes.push_back(count(b));
    else
      ++singletons;
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return theta_formula(sizes, singletons);
}

}  // namespace

std::vector<std::size_t> members(VertexSet s) {
  std::vector<std::size_t> out;
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet to_vertex_set(std::span<const std::size_t> vs) {
  VertexSet s = 0;
  for (std::size_t v : vs) {
    if (v >= kMaxGraphOrder) throw std::invalid_argument("vertex index exceeds 64");
    s |= singleton(v);
  }
  return s;
}

bool clique_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

PatternGraph::PatternGraph(std::size_t n, std::span<const Edge> edges) : adjacency_(n, 0) {
  if (n > kMaxGraphOrder) throw std::invalid_argument("graphs are limited to 64 vertices");
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                  "} has an endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u + 1));
    adjacency_[u] |= singleton(v);
    adjacency_[v] |= singleton(u);
  }
}

PatternGraph PatternGraph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return PatternGraph(n, edges);
}

PatternGraph PatternGraph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return PatternGraph(n, edges);
}

PatternGraph PatternGraph::star(std::size_t leaves) {
  return join_vertex(PatternGraph(leaves));
}

VertexSet PatternGraph::vertices() const {
  return order() == kMaxGraphOrder ? ~VertexSet{0} : singleton(order()) - 1;
}

bool PatternGraph::is_clique(VertexSet s) const {
  for (VertexSet rest = s; rest != 0; rest &= rest - 1) {
    const std::size_t v = lowest(rest);
    if (v >= order()) return false;
    if ((s & ~singleton(v) & ~adjacency_[v]) != 0) return false;
  }
  return true;
}

bool PatternGraph::has_edges() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(), [](VertexSet s) { return s != 0; });
}

std::size_t PatternGraph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet s : adjacency_) twice += count(s);
  return twice / 2;
}

std::vector<Edge> PatternGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v : members(adjacency_[u] & ~(singleton(u + 1) - 1))) out.emplace_back(u, v);
  return out;
}

CliqueCover::CliqueCover(const PatternGraph& g, std::vector<std::vector<std::size_t>> cliques)
    : order_(g.order()), cliques_(std::move(cliques)) {
  VertexSet covered = 0;
  for (auto& c : cliques_) {
    if (c.empty()) throw std::invalid_argument("vertex clique cover contains an empty set");
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw std::invalid_argument("clique lists a vertex twice");
    for (std::size_t v : c) check_vertex(g, v);
    const VertexSet s = to_vertex_set(c);
    if (!g.is_clique(s)) throw std::invalid_argument("vertex clique cover contains a non-clique");
    covered |= s;
  }
  if (covered != g.vertices())
    throw std::invalid_argument("vertex clique cover misses vertex " +
                                std::to_string(lowest(g.vertices() & ~covered) + 1));
  std::sort(cliques_.begin(), cliques_.end(), clique_less);
}

std::size_t CliqueCover::k() const {
  return static_cast<std::size_t>(
      std::count_if(cliques_.begin(), cliques_.end(), [](const auto& c) { return c.size() >= 2; }));
}

std::size_t CliqueCover::l() const { return cliques_.size() - k(); }

std::vector<std::size_t> CliqueCover::large_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& c : cliques_)
    if (c.size() >= 2) sizes.push_back(c.size());
  return sizes;
}

bool CliqueCover::is_partition() const {
  std::size_t total = 0;
  for (const auto& c : cliques_) total += c.size();
  return total == order_;
}

EdgeCliqueCover::EdgeCliqueCover(const PatternGraph& g,
                                 std::vector<std::vector<std::size_t>> cliques)
    : cliques_(std::move(cliques)) {
  std::vector<VertexSet> covered(g.order(), 0);
  for (auto& c : cliques_) {
    std::sort(c.begin(), c.end());
    for (std::size_t v : c) check_vertex(g, v);
    const VertexSet s = to_vertex_set(c);
    if (!g.is_clique(s)) throw std::invalid_argument("edge clique cover contains a non-clique");
    for (std::size_t v : c) covered[v] |= s & ~singleton(v);
  }
  for (std::size_t v = 0; v < g.order(); ++v)
    if ((g.neighbors(v) & ~covered[v]) != 0)
      throw std::invalid_argument("edge clique cover misses edge {" + std::to_string(v + 1) + "," +
                                  std::to_string(lowest(g.neighbors(v) & ~covered[v]) + 1) + "}");
  std::sort(cliques_.begin(), cliques_.end(), clique_less);
}

PatternGraph pattern_graph(const SymTropMatrix& a) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    for (std::size_t j = i + 1; j < a.dimension(); ++j)
      if (a(i, j).is_zero()) edges.emplace_back(i, j);
  return PatternGraph(a.dimension(), edges);
}

std::vector<int> distances_from(const PatternGraph& g, std::size_t source) {
  check_vertex(g, source);
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : members(g.neighbors(u))) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int diameter(const PatternGraph& g) {
  int diam = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    const auto dist = distances_from(g, s);
    diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
  }
  return diam;
}

PatternGraph induced_subgraph(const PatternGraph& g, std::span<const std::size_t> vertices) {
  std::vector<std::size_t> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("induced_subgraph: repeated vertex");
  for (std::size_t v : sorted) check_vertex(g, v);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j])) edges.emplace_back(i, j);
  return PatternGraph(sorted.size(), edges);
}

PatternGraph join_vertex(const PatternGraph& g) {
  auto edges = g.edges();
  const std::size_t w = g.order();
  for (std::size_t v = 0; v < w; ++v) edges.emplace_back(v, w);
  return PatternGraph(w + 1, edges);
}

std::vector<VertexSet> all_cliques(const PatternGraph& g) {
  std::vector<VertexSet> out;
  cliques_within(g, 0, g.vertices(), out);
  out.erase(out.begin());  // the empty clique
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_cliques(const PatternGraph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, 0, g.vertices(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

long long theta_formula(std::span<const std::size_t> ordered_sizes, std::size_t singletons) {
  const auto k = static_cast<long long>(ordered_sizes.size());
  const auto l = static_cast<long long>(singletons);
  long long weighted = 0;
  for (std::size_t i = 0; i < ordered_sizes.size(); ++i)
    weighted += static_cast<long long>(i) * static_cast<long long>(ordered_sizes[i]);
  return k + weighted + k * l + (l * l) / 4;
}

long long theta(const CliqueCover& cover) { return theta_formula(cover.large_sizes(), cover.l()); }

namespace {

class ThetaSearch {
 public:
  explicit ThetaSearch(const PatternGraph& g) : g_(g) {}

  ThetaCover run() {
    explore(0);
    return {CliqueCover(g_, best_list_), best_};
  }

 private:
  void explore(VertexSet assigned) {
    const long long partial = theta_of_blocks(blocks_);
    if (partial > best_) return;
    if (assigned == g_.vertices()) {
      auto list = canonical_list(blocks_);
      if (partial < best_ || list_less(list, best_list_)) {
        best_ = partial;
        best_list_ = std::move(list);
      }
      return;
    }
    const std::size_t v = lowest(g_.vertices() & ~assigned);
    std::vector<VertexSet> options;
    cliques_within(g_, singleton(v), g_.neighbors(v) & ~assigned, options);
    std::sort(options.begin(), options.end(), [](VertexSet a, VertexSet b) {
      return clique_less(members(a), members(b));
    });
    for (VertexSet block : options) {
      blocks_.push_back(block);
      explore(assigned | block);
      blocks_.pop_back();
    }
  }

  const PatternGraph& g_;
  std::vector<VertexSet> blocks_;
  long long best_ = LLONG_MAX;
  std::vector<std::vector<std::size_t>> best_list_;
};

class VertexCoverSearch {
 public:
  explicit VertexCoverSearch(const PatternGraph& g) : g_(g), best_(g.order()) {}

  std::size_t run() {
    explore(g_.vertices(), 0);
    return best_;
  }

 private:
  void explore(VertexSet unassigned, std::size_t used) {
    if (unassigned == 0) {
      best_ = std::min(best_, used);
      return;
    }
    if (used + 1 >= best_) return;
    const std::size_t v = lowest(unassigned);
    // Some optimal partition gives v a block that is maximal inside the
    // unassigned vertices: any extendable block can absorb its extension.
    std::vector<VertexSet> blocks;
    bron_kerbosch(g_, singleton(v), g_.neighbors(v) & unassigned, 0, blocks);
    for (VertexSet block : blocks) explore(unassigned & ~block, used + 1);
  }

  const PatternGraph& g_;
  std::size_t best_;
};

class EdgeCoverSearch {
 public:
  explicit EdgeCoverSearch(const PatternGraph& g) : g_(g) {
    for (VertexSet c : maximal_cliques(g))
      if (count(c) >= 2) cliques_.push_back(c);
    std::sort(cliques_.begin(), cliques_.end(), [](VertexSet a, VertexSet b) {
      return clique_less(members(a), members(b));
    });
  }

  std::vector<VertexSet> run() {
    std::vector<VertexSet> uncovered(g_.order());
    for (std::size_t v = 0; v < g_.order(); ++v) uncovered[v] = g_.neighbors(v);
    best_ = greedy(uncovered);
    explore(uncovered);
    return best_;
  }

 private:
  std::vector<VertexSet> greedy(std::vector<VertexSet> uncovered) const {
    std::vector<VertexSet> chosen;
    while (true) {
      std::size_t best_gain = 0;
      VertexSet pick = 0;
      for (VertexSet c : cliques_) {
        std::size_t gain = 0;
        for (std::size_t v : members(c)) gain += count(uncovered[v] & c);
        if (gain > best_gain) {
          best_gain = gain;
          pick = c;
        }
      }
      if (best_gain == 0) return chosen;
      chosen.push_back(pick);
      for (std::size_t v : members(pick)) uncovered[v] &= ~pick;
    }
  }

  // Uncovered edges that pairwise span no clique each need their own clique.
  std::size_t packing_bound(const std::vector<VertexSet>& uncovered) const {
    std::vector<VertexSet> packed;
    for (std::size_t u = 0; u < uncovered.size(); ++u) {
      for (std::size_t v : members(uncovered[u] & ~(singleton(u + 1) - 1))) {
        const VertexSet e = singleton(u) | singleton(v);
        const bool independent = std::none_of(packed.begin(), packed.end(),
                                              [&](VertexSet f) { return g_.is_clique(e | f); });
        if (independent) packed.push_back(e);
      }
    }
    return packed.size();
  }

  void explore(std::vector<VertexSet>& uncovered) {
    std::size_t best_u = 0, best_v = 0, fewest = SIZE_MAX;
    for (std::size_t u = 0; u < uncovered.size(); ++u) {
      for (std::size_t v : members(uncovered[u] & ~(singleton(u + 1) - 1))) {
        const VertexSet e = singleton(u) | singleton(v);
        const auto n = static_cast<std::size_t>(std::count_if(
            cliques_.begin(), cliques_.end(), [&](VertexSet c) { return (c & e) == e; }));
        if (n < fewest) {
          fewest = n;
          best_u = u;
          best_v = v;
        }
      }
    }
    if (fewest == SIZE_MAX) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + packing_bound(uncovered) >= best_.size()) return;
    const VertexSet e = singleton(best_u) | singleton(best_v);
    for (VertexSet c : cliques_) {
      if ((c & e) != e) continue;
      const auto saved = uncovered;
      for (std::size_t w : members(c)) uncovered[w] &= ~c;
      chosen_.push_back(c);
      explore(uncovered);
      chosen_.pop_back();
      uncovered = saved;
    }
  }

  const PatternGraph& g_;
  std::vector<VertexSet> cliques_;
  std::vector<VertexSet> chosen_;
  std::vector<VertexSet> best_;
};

}  // namespace

ThetaCover min_theta_cover(const PatternGraph& g) { return ThetaSearch(g).run(); }

CliqueCover to_partition(const PatternGraph& g, const CliqueCover& cover) {
  VertexSet taken = 0;
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& c : cover.cliques()) {
    const VertexSet rest = to_vertex_set(c) & ~taken;
    if (rest == 0) continue;
    blocks.push_back(members(rest));
    taken |= rest;
  }
  return CliqueCover(g, std::move(blocks));
}

std::size_t min_vertex_clique_cover_size(const PatternGraph& g) {
  return VertexCoverSearch(g).run();
}

EdgeCoverResult edge_clique_cover_number(const PatternGraph& g) {
  const auto chosen = EdgeCoverSearch(g).run();
  return {chosen.size(), EdgeCliqueCover(g, canonical_list(chosen))};
}

long long cp_rank_upper_bound(const SymTropMatrix& a) {
  if (!is_normalized(a)) throw NotNormalized("upper bound needs a normalized matrix");
  const auto g = pattern_graph(a);
  const auto n = static_cast<long long>(a.dimension());
  if (!g.has_edges() && n <= 4) return n;
  return min_theta_cover(g).theta;
}

SymTropMatrix diameter_witness_matrix(const PatternGraph& g, std::size_t u, std::size_t v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw std::invalid_argument("witness pair must be two distinct vertices");
  if (g.adjacent(u, v)) throw std::invalid_argument("witness pair must be non-adjacent");
  return SymTropMatrix::from_function(g.order(), [&](std::size_t i, std::size_t j) {
    if (i == j || g.adjacent(i, j)) return TropScalar(0L);
    if ((i == u && j == v) || (i == v && j == u)) return TropScalar(1L);
    return TropScalar(2L);
  });
}

}  // namespace tropcp
