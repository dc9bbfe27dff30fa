// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/exact_rank.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "tropcp/cp_analysis.hpp"
#include "tropcp/fourier_motzkin.hpp"
#include "tropcp/pattern_graphs.hpp"

namespace tropcp {

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes += other.nodes;
  refutations += other.refutations;
  skeletons += other.skeletons;
  seconds += other.seconds;
  return *this;
}

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::kFound: return "found";
    case SearchOutcome::kRefuted: return "refuted";
    case SearchOutcome::kUndetermined: return "undetermined";
  }
  return "?";
}

const char* to_string(RankStatus status) {
  switch (status) {
    case RankStatus::kExact: return "exact";
    case RankStatus::kNotCompletelyPositive: return "not_completely_positive";
    case RankStatus::kUndetermined: return "undetermined";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Per-factor feasibility

namespace {

// x_v = sign · x_root + offset.
struct Affine {
  std::size_t root = 0;
  int sign = 1;
  Rational offset;
};

bool holds(const PairConstraint& c, const std::vector<Rational>& x) {
  Rational lhs = x[c.first];
  if (c.second != kNoVariable) lhs += x[c.second];
  return c.relation == Relation::kEqual ? lhs == c.rhs : lhs >= c.rhs;
}

}  // namespace

std::optional<TropVector> solve_factor_system(const FactorConstraintSystem& system) {
  std::vector<std::size_t> support = system.support;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<std::ptrdiff_t> local(system.dimension, -1);
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= system.dimension)
      throw std::invalid_argument("support coordinate out of range");
    local[support[i]] = static_cast<std::ptrdiff_t>(i);
  }
  const std::size_t m = support.size();
  auto to_local = [&](std::size_t coord) {
    if (coord >= system.dimension || local[coord] < 0)
      throw std::invalid_argument("constraint names a coordinate outside the support");
    return static_cast<std::size_t>(local[coord]);
  };

  // Local copy of the constraints in support-relative indices.
  std::vector<PairConstraint> constraints;
  constraints.reserve(system.constraints.size());
  for (const auto& c : system.constraints) {
    PairConstraint lc = c;
    lc.first = to_local(c.first);
    if (c.second != kNoVariable) lc.second = to_local(c.second);
    constraints.push_back(std::move(lc));
  }

  std::vector<std::vector<std::pair<std::size_t, Rational>>> links(m);
  std::vector<std::pair<std::size_t, Rational>> pinned;
  for (const auto& c : constraints) {
    if (c.relation != Relation::kEqual) continue;
    if (c.second == kNoVariable)
      pinned.emplace_back(c.first, c.rhs);
    else if (c.second == c.first)
      pinned.emplace_back(c.first, c.rhs / 2);
    else {
      links[c.first].emplace_back(c.second, c.rhs);
      links[c.second].emplace_back(c.first, c.rhs);
    }
  }

  std::vector<std::optional<Affine>> form(m);
  std::vector<std::optional<Rational>> root_value(m);
  bool consistent = true;
  auto pin_root = [&](std::size_t root, const Rational& value) {
    if (root_value[root] && *root_value[root] != value) consistent = false;
    root_value[root] = value;
  };

  for (std::size_t start = 0; start < m && consistent; ++start) {
    if (form[start]) continue;
    form[start] = Affine{start, 1, 0};
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && consistent) {
      const std::size_t v = queue.front();
      queue.pop_front();
      const Affine fv = *form[v];
      for (const auto& [w, rhs] : links[v]) {
        // x_v + x_w = rhs  =>  x_w = -sign_v · root + (rhs - offset_v)
        Affine expected{fv.root, -fv.sign, Rational(rhs - fv.offset)};
        if (!form[w]) {
          form[w] = expected;
          queue.push_back(w);
        } else if (form[w]->sign == expected.sign) {
          if (form[w]->offset != expected.offset) consistent = false;
        } else {
          // Odd cycle: 2 · sign_v · root = rhs - offset_v - offset_w.
          pin_root(fv.root, Rational((rhs - fv.offset - form[w]->offset) / (2 * fv.sign)));
        }
      }
    }
  }
  for (const auto& [v, value] : pinned) {
    if (!consistent) break;
    const Affine& f = *form[v];
    pin_root(f.root, Rational((value - f.offset) * f.sign));
  }
  if (!consistent) return std::nullopt;

  std::vector<std::ptrdiff_t> variable_of(m, -1);
  std::size_t variables = 0;
  for (std::size_t v = 0; v < m; ++v)
    if (form[v]->root == v && !root_value[v]) variable_of[v] = static_cast<std::ptrdiff_t>(variables++);

  std::vector<LinearInequality> rows;
  for (const auto& c : constraints) {
    if (c.relation != Relation::kAtLeast) continue;
    LinearInequality row{std::vector<Rational>(variables), c.rhs};
    auto add_term = [&](std::size_t v, int multiplicity) {
      const Affine& f = *form[v];
      if (root_value[f.root]) {
        row.rhs -= multiplicity * (f.sign * *root_value[f.root] + f.offset);
      } else {
        row.coefficients[static_cast<std::size_t>(variable_of[f.root])] += multiplicity * f.sign;
        row.rhs -= multiplicity * f.offset;
      }
    };
    if (c.second == kNoVariable)
      add_term(c.first, 1);
    else if (c.second == c.first)
      add_term(c.first, 2);
    else {
      add_term(c.first, 1);
      add_term(c.second, 1);
    }
    rows.push_back(std::move(row));
  }
  const auto point = fourier_motzkin_solve(rows, variables);
  if (!point) return std::nullopt;

  std::vector<Rational> x(m);
  for (std::size_t v = 0; v < m; ++v) {
    const Affine& f = *form[v];
    const Rational root = root_value[f.root] ? *root_value[f.root]
                                             : (*point)[static_cast<std::size_t>(variable_of[f.root])];
    x[v] = f.sign * root + f.offset;
  }
  for (const auto& c : constraints)
    if (!holds(c, x)) throw std::logic_error("factor solver produced a violating point");

  std::vector<TropScalar> entries(system.dimension);
  for (std::size_t v = 0; v < m; ++v) entries[support[v]] = TropScalar(x[v]);
  return TropVector(std::move(entries));
}

// ---------------------------------------------------------------------------
// Search for CPrk(A) <= r

namespace {

using Clock = std::chrono::steady_clock;
using RequirementSet = std::uint64_t;

constexpr std::size_t kMaxSearchDimension = 11;  // keeps every requirement set in 64 bits

std::size_t bit_index(VertexSet s) { return static_cast<std::size_t>(std::countr_zero(s)); }

struct Requirement {
  std::size_t k;
  std::size_t l;
  Rational value;
};

// Everything shared read-only by the workers.
class SearchProblem {
 public:
  SearchProblem(const SymTropMatrix& a, std::size_t r) : a_(a), n_(a.dimension()), r_(r) {
    if (n_ > kMaxSearchDimension)
      throw std::invalid_argument("exact search supports matrices up to 11x11");
    graph_ = pattern_graph(a);
    infinite_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && a(i, j).is_infinite()) infinite_[i] |= singleton(j);

    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t l = k + 1; l < n_; ++l)
        if (a(k, l).is_finite() && !a(k, l).is_zero()) requirements_.push_back({k, l, a(k, l).value()});
    std::stable_sort(requirements_.begin(), requirements_.end(),
                     [](const Requirement& x, const Requirement& y) { return x.value < y.value; });

    zero_sets_ = all_cliques(graph_);
    std::sort(zero_sets_.begin(), zero_sets_.end(), [](VertexSet x, VertexSet y) {
      return clique_less(members(x), members(y));
    });
    zero_sets_.push_back(0);
    for (VertexSet z : zero_sets_) compatible_.push_back(compatible_requirements(z));
  }

  const SymTropMatrix& matrix() const { return a_; }
  std::size_t dimension() const { return n_; }
  std::size_t factors() const { return r_; }
  const PatternGraph& graph() const { return graph_; }
  const std::vector<Requirement>& requirements() const { return requirements_; }
  const std::vector<VertexSet>& zero_sets() const { return zero_sets_; }
  RequirementSet compatible(std::size_t zero_set_index) const { return compatible_[zero_set_index]; }
  RequirementSet all_requirements() const {
    return requirements_.size() == 64 ? ~RequirementSet{0}
                                      : (RequirementSet{1} << requirements_.size()) - 1;
  }

  bool has_infinite_pair(VertexSet support) const {
    for (VertexSet rest = support; rest != 0; rest &= rest - 1)
      if ((infinite_[bit_index(rest)] & support) != 0) return true;
    return false;
  }

  VertexSet support_of(VertexSet zero, RequirementSet assigned) const {
    VertexSet s = zero;
    for (; assigned != 0; assigned &= assigned - 1) {
      const auto& q = requirements_[static_cast<std::size_t>(std::countr_zero(assigned))];
      s |= singleton(q.k) | singleton(q.l);
    }
    return s;
  }

  FactorConstraintSystem factor_system(VertexSet zero, RequirementSet assigned) const {
    FactorConstraintSystem system;
    system.dimension = n_;
    const VertexSet support = support_of(zero, assigned);
    system.support = members(support);
    for (std::size_t z : members(zero))
      system.constraints.push_back({z, kNoVariable, Relation::kEqual, 0});
    for (RequirementSet rest = assigned; rest != 0; rest &= rest - 1) {
      const auto& q = requirements_[static_cast<std::size_t>(std::countr_zero(rest))];
      system.constraints.push_back({q.k, q.l, Relation::kEqual, q.value});
    }
    for (std::size_t s : members(support & ~zero))
      system.constraints.push_back({s, kNoVariable, Relation::kAtLeast, 0});
    const auto coords = members(support);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      for (std::size_t j = i + 1; j < coords.size(); ++j) {
        const std::size_t s = coords[i];
        const std::size_t t = coords[j];
        if ((zero >> s & 1U) && (zero >> t & 1U)) continue;
        const TropScalar& entry = a_(s, t);
        if (entry.is_finite() && sgn(entry.value()) > 0)
          system.constraints.push_back({s, t, Relation::kAtLeast, entry.value()});
      }
    }
    return system;
  }

 private:
  // Requirements a factor zero on z could still achieve. With z fixed at 0,
  // domination forces b_k >= a_zk for every z in the zero set.
  RequirementSet compatible_requirements(VertexSet zero) const {
    RequirementSet mask = 0;
    for (std::size_t q = 0; q < requirements_.size(); ++q) {
      const auto& req = requirements_[q];
      const VertexSet support = zero | singleton(req.k) | singleton(req.l);
      if (has_infinite_pair(support)) continue;
      Rational floor_k = 0;
      Rational floor_l = 0;
      for (std::size_t z : members(zero)) {
        if (a_(z, req.k).is_finite()) floor_k = std::max(floor_k, a_(z, req.k).value());
        if (a_(z, req.l).is_finite()) floor_l = std::max(floor_l, a_(z, req.l).value());
      }
      if (zero >> req.k & 1U) floor_k = 0;
      if (zero >> req.l & 1U) floor_l = 0;
      if (floor_k + floor_l <= req.value) mask |= RequirementSet{1} << q;
    }
    return mask;
  }

  const SymTropMatrix& a_;
  std::size_t n_;
  std::size_t r_;
  PatternGraph graph_;
  std::vector<VertexSet> infinite_;
  std::vector<Requirement> requirements_;
  std::vector<VertexSet> zero_sets_;
  std::vector<RequirementSet> compatible_;
};

// Sorted multisets of zero-set indices covering all vertices and edges, with
// every requirement compatible with some member.
std::vector<std::vector<std::size_t>> enumerate_skeletons(const SearchProblem& p) {
  std::vector<std::vector<std::size_t>> out;
  const auto& sets = p.zero_sets();
  const PatternGraph& g = p.graph();
  const std::size_t r = p.factors();
  std::vector<std::size_t> chosen;

  auto complete = [&]() {
    std::vector<VertexSet> covered(g.order(), 0);
    RequirementSet reachable = 0;
    VertexSet seen = 0;
    for (std::size_t idx : chosen) {
      const VertexSet z = sets[idx];
      seen |= z;
      reachable |= p.compatible(idx);
      for (std::size_t v : members(z)) covered[v] |= z;
    }
    if (seen != g.vertices() || reachable != p.all_requirements()) return false;
    for (std::size_t v = 0; v < g.order(); ++v)
      if ((g.neighbors(v) & ~covered[v]) != 0) return false;
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t from, VertexSet seen) -> void {
    if (chosen.size() == r) {
      if (complete()) out.push_back(chosen);
      return;
    }
    const std::size_t slots = r - chosen.size();
    for (std::size_t idx = from; idx < sets.size(); ++idx) {
      // Sets are ordered by size, so nothing from idx on is larger.
      const auto largest = static_cast<std::size_t>(std::popcount(sets[idx]));
      const auto missing = static_cast<std::size_t>(std::popcount(g.vertices() & ~seen));
      if (missing > slots * largest) return;
      chosen.push_back(idx);
      self(self, idx, seen | sets[idx]);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

struct SharedControl {
  const SearchLimits& limits;
  Clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> best_skeleton{SIZE_MAX};
  std::mutex mutex;
  std::string abort_reason;

  explicit SharedControl(const SearchLimits& l) : limits(l), start(Clock::now()) {}

  void stop(const char* reason) {
    std::lock_guard lock(mutex);
    if (!abort.exchange(true)) abort_reason = reason;
  }
};

struct MemoKey {
  VertexSet zero;
  RequirementSet assigned;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const {
    return std::hash<std::uint64_t>()(k.assigned * 0x9E3779B97F4A7C15ULL ^ k.zero);
  }
};

// Depth-first search over designated achievers inside one skeleton.
class SkeletonSearch {
 public:
  SkeletonSearch(const SearchProblem& p, SharedControl& control) : p_(p), control_(control) {}

  enum class Result { kFound, kExhausted, kAborted };

  Result run(const std::vector<std::size_t>& skeleton) {
    zero_index_ = skeleton;
    zero_.clear();
    support_.clear();
    for (std::size_t idx : skeleton) {
      zero_.push_back(p_.zero_sets()[idx]);
      support_.push_back(p_.zero_sets()[idx]);
    }
    assigned_.assign(skeleton.size(), 0);
    ++stats.skeletons;
    if (explore(0)) return Result::kFound;
    return control_.abort.load() ? Result::kAborted : Result::kExhausted;
  }

  std::vector<TropVector> factors() const {
    std::vector<TropVector> out;
    for (std::size_t i = 0; i < zero_.size(); ++i) {
      if (zero_[i] == 0 && assigned_[i] == 0) continue;
      auto b = solve_factor_system(p_.factor_system(zero_[i], assigned_[i]));
      if (!b) throw std::logic_error("accepted factor became infeasible");
      out.push_back(std::move(*b));
    }
    return out;
  }

  SearchStats stats;

 private:
  bool feasible(VertexSet zero, RequirementSet assigned) {
    const MemoKey key{zero, assigned};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool ok = solve_factor_system(p_.factor_system(zero, assigned)).has_value();
    memo_.emplace(key, ok);
    return ok;
  }

  bool out_of_budget() {
    const std::uint64_t total = control_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > control_.limits.node_limit) {
      control_.stop("node limit");
      return true;
    }
    if ((++local_nodes_ & 1023U) == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - control_.start;
      if (elapsed.count() > control_.limits.time_limit_seconds) {
        control_.stop("time limit");
        return true;
      }
    }
    return control_.abort.load(std::memory_order_relaxed);
  }

  bool explore(std::size_t q) {
    const auto& reqs = p_.requirements();
    if (q == reqs.size()) return true;
    const auto& req = reqs[q];
    const RequirementSet bit = RequirementSet{1} << q;
    const std::size_t r = zero_.size();
    for (std::size_t i = 0; i < r; ++i) {
      if ((p_.compatible(zero_index_[i]) & bit) == 0) continue;
      bool duplicate = false;
      for (std::size_t j = 0; j < i && !duplicate; ++j)
        duplicate = zero_[j] == zero_[i] && assigned_[j] == assigned_[i];
      if (duplicate) continue;

      ++stats.nodes;
      if (out_of_budget()) return false;
      const VertexSet support = support_[i] | singleton(req.k) | singleton(req.l);
      if ((support != support_[i] && p_.has_infinite_pair(support)) ||
          !feasible(zero_[i], assigned_[i] | bit)) {
        ++stats.refutations;
        continue;
      }
      const VertexSet saved_support = support_[i];
      support_[i] = support;
      assigned_[i] |= bit;
      if (explore(q + 1)) return true;
      assigned_[i] &= ~bit;
      support_[i] = saved_support;
      if (control_.abort.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  const SearchProblem& p_;
  SharedControl& control_;
  std::vector<std::size_t> zero_index_;
  std::vector<VertexSet> zero_;
  std::vector<VertexSet> support_;
  std::vector<RequirementSet> assigned_;
  std::unordered_map<MemoKey, bool, MemoKeyHash> memo_;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace

LeqResult cp_rank_leq(const SymTropMatrix& a, std::size_t r, const SearchLimits& limits) {
  if (!is_normalized(a)) throw NotNormalized("exact search needs a normalized matrix");
  const auto start = Clock::now();
  LeqResult result;
  const std::size_t n = a.dimension();
  if (n == 0) {
    result.outcome = SearchOutcome::kFound;
    result.decomposition.emplace(a, std::vector<TropVector>{});
    return result;
  }
  if (r == 0) {
    result.outcome = SearchOutcome::kRefuted;
    return result;
  }

  const SearchProblem problem(a, r);
  const auto skeletons = enumerate_skeletons(problem);
  SharedControl control(limits);
  std::vector<std::optional<std::vector<TropVector>>> certificates(skeletons.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    SkeletonSearch search(problem, control);
    while (!control.abort.load()) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= skeletons.size()) break;
      if (idx > control.best_skeleton.load()) continue;
      if (search.run(skeletons[idx]) != SkeletonSearch::Result::kFound) continue;
      std::lock_guard lock(control.mutex);
      certificates[idx] = search.factors();
      if (idx < control.best_skeleton.load()) control.best_skeleton.store(idx);
    }
    std::lock_guard lock(control.mutex);
    result.stats += search.stats;
  };

  unsigned threads = limits.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                         : limits.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, skeletons.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  const std::size_t best = control.best_skeleton.load();
  if (best != SIZE_MAX) {
    result.outcome = SearchOutcome::kFound;
    result.decomposition.emplace(a, std::move(*certificates[best]));
  } else if (control.abort.load()) {
    result.outcome = SearchOutcome::kUndetermined;
    result.reason = control.abort_reason;
  } else {
    result.outcome = SearchOutcome::kRefuted;
  }
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::size_t rank_lower_bound(const SymTropMatrix& a) {
  if (!is_normalized(a)) throw NotNormalized("rank lower bound needs a normalized matrix");
  const auto g = pattern_graph(a);
  std::size_t isolated = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0) ++isolated;
  const std::size_t cc = edge_clique_cover_number(g).number;
  return std::max({cc + isolated, min_vertex_clique_cover_size(g), std::size_t{1}});
}

RankResult cp_rank_exact(const SymTropMatrix& a, std::size_t r_max, const SearchLimits& limits) {
  RankResult result;
  if (!is_completely_positive(a)) {
    result.status = RankStatus::kNotCompletelyPositive;
    return result;
  }
  const auto [normalized, record] = normalize(a);
  if (normalized.dimension() == 0) {
    result.status = RankStatus::kExact;
    result.rank = 1;
    result.proven_lower_bound = 1;
    result.certificate.structural_lower_bound = 1;
    result.certificate.upper.emplace(a, std::vector{TropVector::all_infinite(a.dimension())});
    return result;
  }

  const std::size_t lower = rank_lower_bound(normalized);
  result.certificate.structural_lower_bound = lower;
  result.proven_lower_bound = lower;
  for (std::size_t r = lower; r <= r_max; ++r) {
    auto leq = cp_rank_leq(normalized, r, limits);
    result.total += leq.stats;
    switch (leq.outcome) {
      case SearchOutcome::kFound:
        if (leq.decomposition->rank() != r)
          throw std::logic_error("search found fewer factors than a proven lower bound");
        result.status = RankStatus::kExact;
        result.rank = r;
        result.proven_lower_bound = r;
        result.certificate.upper = record.lift(*leq.decomposition);
        return result;
      case SearchOutcome::kRefuted:
        result.certificate.lower.push_back({r, leq.stats});
        result.proven_lower_bound = r + 1;
        break;
      case SearchOutcome::kUndetermined:
        result.status = RankStatus::kUndetermined;
        result.reason = leq.reason;
        return result;
    }
  }
  result.status = RankStatus::kUndetermined;
  result.reason = "r_max";
  return result;
}

std::size_t zero_one_rank(const SymTropMatrix& a) {
  const std::size_t n = a.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    if (!a(i, i).is_zero()) throw std::invalid_argument("0/1 rank needs a zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!a(i, j).is_zero() && a(i, j) != TropScalar(1L))
        throw std::invalid_argument("0/1 rank needs every off-diagonal entry to be 0 or 1");
  }
  const auto g = pattern_graph(a);
  std::size_t isolated = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (g.neighbors(v) == 0) ++isolated;
  return edge_clique_cover_number(g).number + isolated;
}

}  // namespace tropcp
