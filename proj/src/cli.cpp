// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropcp/cp_analysis.hpp"
#include "tropcp/decomposition.hpp"
#include "tropcp/exact_rank.hpp"
#include "tropcp/generate.hpp"
#include "tropcp/matrix_io.hpp"
#include "tropcp/pattern_graphs.hpp"
#include "tropcp/report.hpp"
#include "tropcp/selftest.hpp"

namespace tropcp {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::optional<SymTropMatrix> matrix;
  std::optional<PatternGraph> graph;
};

Input load_input(const std::string& path) {
  const std::string text = read_file(path);
  Input in;
  if (detect_file_kind(text) == FileKind::kMatrix)
    in.matrix = parse_matrix(text);
  else
    in.graph = parse_graph(text);
  return in;
}

SymTropMatrix load_matrix(const std::string& path) {
  auto in = load_input(path);
  if (!in.matrix) throw UsageError(path + " is a graph file; this command needs a matrix");
  return std::move(*in.matrix);
}

PatternGraph load_graph(const std::string& path) {
  auto in = load_input(path);
  if (!in.graph) throw UsageError(path + " is a matrix file; this command needs a graph");
  return std::move(*in.graph);
}

json cliques_json(const std::vector<std::vector<std::size_t>>& cliques,
                  const std::vector<std::size_t>& labels = {}) {
  json out = json::array();
  for (const auto& clique : cliques) {
    json c = json::array();
    for (std::size_t v : clique) c.push_back((labels.empty() ? v : labels[v]) + 1);
    out.push_back(std::move(c));
  }
  return out;
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes}, {"refutations", s.refutations}, {"skeletons", s.skeletons},
          {"seconds", s.seconds}};
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned default_threads() {
  if (const char* env = std::getenv("TROPCP_THREADS")) {
    try {
      const unsigned long t = std::stoul(env);
      if (t > 0) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// Upper bound from the pattern alone: n for small edgeless patterns, the
// minimum θ otherwise.
long long pattern_upper_bound(const PatternGraph& g, ThetaCover* best = nullptr) {
  ThetaCover cover = min_theta_cover(g);
  const long long bound =
      (!g.has_edges() && g.order() <= 4) ? static_cast<long long>(g.order()) : cover.theta;
  if (best) *best = std::move(cover);
  return bound;
}

void emit(std::ostream& sink, const json& report) { sink << report.dump(2) << '\n'; }

int cmd_check(const std::string& path, std::ostream& sink) {
  const auto a = load_matrix(path);
  json report = make_report("check", a);
  const bool cp = is_completely_positive(a);
  report["result"] = {{"completely_positive", cp}};
  if (!cp) {
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      for (std::size_t j = i + 1; j < a.dimension(); ++j) {
        if (trop_mul(a(i, j), a(i, j)) < trop_mul(a(i, i), a(j, j))) {
          report["result"]["violation"] = {i + 1, j + 1};
          i = a.dimension();
          break;
        }
      }
    }
  }
  emit(sink, report);
  return cp ? kExitOk : kExitFalse;
}

int cmd_normalize(const std::string& path, bool as_json, std::ostream& sink, std::ostream& err) {
  const auto a = load_matrix(path);
  if (!is_completely_positive(a)) {
    err << "tropcp: matrix is not completely positive\n";
    return kExitFalse;
  }
  const auto [c, record] = normalize(a);
  if (!as_json) {
    sink << render_matrix(c);
    return kExitOk;
  }
  json report = make_report("normalize", a);
  json deleted = json::array();
  for (std::size_t i : record.deleted_indices) deleted.push_back(i + 1);
  json shifts = json::array();
  for (const auto& s : record.shifts) shifts.push_back(render_scalar(s));
  report["result"] = {{"matrix", matrix_to_json(c)}, {"deleted", deleted}, {"shifts", shifts}};
  emit(sink, report);
  return kExitOk;
}

int cmd_graph(const std::string& path, std::ostream& sink) {
  auto in = load_input(path);
  const PatternGraph g = in.matrix ? pattern_graph(*in.matrix) : *in.graph;
  json report = in.matrix ? make_report("graph", *in.matrix) : make_report("graph", g);
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  const int d = diameter(g);
  report["result"] = {{"order", g.order()},
                      {"edge_count", g.edge_count()},
                      {"edges", std::move(edges)},
                      {"connected", d != kUnreachable},
                      {"diameter", d == kUnreachable ? json("inf") : json(d)}};
  emit(sink, report);
  return kExitOk;
}

int cmd_bound(const std::string& path, std::ostream& sink, std::ostream& err) {
  auto in = load_input(path);
  if (in.graph) {
    json report = make_report("bound", *in.graph);
    ThetaCover best{CliqueCover(PatternGraph(0), {}), 0};
    const long long bound = pattern_upper_bound(*in.graph, &best);
    report["result"] = {{"cover", cliques_json(best.cover.cliques())},
                        {"theta", best.theta},
                        {"upper_bound", bound}};
    emit(sink, report);
    return kExitOk;
  }
  const SymTropMatrix& a = *in.matrix;
  if (!is_completely_positive(a)) {
    err << "tropcp: matrix is not completely positive\n";
    return kExitFalse;
  }
  const auto [c, record] = normalize(a);
  json report = make_report("bound", a);
  if (c.dimension() == 0) {
    report["result"] = {{"normalized_dimension", 0}, {"cover", json::array()}, {"upper_bound", 1}};
  } else {
    ThetaCover best{CliqueCover(PatternGraph(0), {}), 0};
    const long long bound = pattern_upper_bound(pattern_graph(c), &best);
    report["result"] = {{"normalized_dimension", c.dimension()},
                        {"cover", cliques_json(best.cover.cliques(), record.kept_indices)},
                        {"theta", best.theta},
                        {"upper_bound", bound}};
  }
  emit(sink, report);
  return kExitOk;
}

int cmd_decompose(const std::string& path, std::ostream& sink, std::ostream& err) {
  const auto a = load_matrix(path);
  if (!is_completely_positive(a)) {
    err << "tropcp: matrix is not completely positive\n";
    return kExitFalse;
  }
  const auto start = Clock::now();
  const auto [c, record] = normalize(a);
  json report = make_report("decompose", a);
  std::optional<Decomposition> d;
  if (c.dimension() == 0) {
    d.emplace(a, std::vector{TropVector::all_infinite(a.dimension())});
    report["result"] = {{"rank", 1}};
  } else {
    const auto best = min_theta_cover(pattern_graph(c));
    const auto built = construct_with_details(c, best.cover);
    d = record.lift(built.decomposition);
    const auto& got = built.achieved;
    report["result"] = {
        {"rank", d->rank()},
        {"cover", cliques_json(built.plan.cover.cliques(), record.kept_indices)},
        {"theta", best.theta},
        {"blocks", {got.a1, got.a2, got.a3, got.a4}},
        {"singleton_fallback", built.used_fallback},
        {"singleton_search", built.used_search}};
  }
  report["result"]["verified"] = d->verify();
  report["certificate"] = decomposition_to_json(*d);
  report["timing"] = {{"seconds", seconds_since(start)}};
  emit(sink, report);
  return kExitOk;
}

struct RankOptions {
  std::optional<std::size_t> max_r;
  std::uint64_t node_limit = SearchLimits{}.node_limit;
  double timeout_s = SearchLimits{}.time_limit_seconds;
  unsigned threads = 0;
};

int cmd_rank(const std::string& path, const RankOptions& opts, std::ostream& sink) {
  const auto a = load_matrix(path);
  json report = make_report("rank", a);
  const auto start = Clock::now();
  std::size_t max_r = 1;
  long long upper = 1;
  if (is_completely_positive(a)) {
    const auto c = normalize(a).matrix;
    if (c.dimension() > 0) upper = pattern_upper_bound(pattern_graph(c));
    max_r = opts.max_r.value_or(static_cast<std::size_t>(upper));
  }
  SearchLimits limits;
  limits.node_limit = opts.node_limit;
  limits.time_limit_seconds = opts.timeout_s;
  limits.threads = opts.threads == 0 ? default_threads() : opts.threads;
  const RankResult r = cp_rank_exact(a, max_r, limits);

  report["status"] = to_string(r.status);
  json refuted = json::array();
  for (const auto& token : r.certificate.lower)
    refuted.push_back({{"r", token.r}, {"stats", stats_json(token.stats)}});
  report["result"] = {{"rank", r.status == RankStatus::kExact ? json(r.rank) : json(nullptr)},
                      {"proven_lower_bound", r.proven_lower_bound},
                      {"structural_lower_bound", r.certificate.structural_lower_bound},
                      {"upper_bound", upper},
                      {"max_r", max_r},
                      {"refuted", std::move(refuted)}};
  if (!r.reason.empty()) report["result"]["reason"] = r.reason;
  if (r.certificate.upper) report["certificate"] = decomposition_to_json(*r.certificate.upper);
  report["stats"] = stats_json(r.total);
  report["timing"] = {{"seconds", seconds_since(start)}, {"threads", limits.threads}};
  emit(sink, report);
  switch (r.status) {
    case RankStatus::kExact: return kExitOk;
    case RankStatus::kNotCompletelyPositive: return kExitFalse;
    case RankStatus::kUndetermined: return kExitUndetermined;
  }
  return kExitUndetermined;
}

int cmd_cc(const std::string& path, std::ostream& sink) {
  auto in = load_input(path);
  const PatternGraph g = in.matrix ? pattern_graph(*in.matrix) : *in.graph;
  json report = in.matrix ? make_report("cc", *in.matrix) : make_report("cc", g);
  const auto cc = edge_clique_cover_number(g);
  report["result"] = {{"cc", cc.number}, {"cover", cliques_json(cc.cover.cliques())}};
  emit(sink, report);
  return kExitOk;
}

int cmd_witness(const std::string& path, const std::vector<std::size_t>& pair, std::ostream& sink) {
  const auto g = load_graph(path);
  if (pair[0] < 1 || pair[1] < 1 || pair[0] > g.order() || pair[1] > g.order())
    throw UsageError("--pair vertices must lie in 1.." + std::to_string(g.order()));
  sink << render_matrix(diameter_witness_matrix(g, pair[0] - 1, pair[1] - 1));
  return kExitOk;
}

int cmd_gen(const std::string& path, std::uint64_t seed, const EntryRange& range, std::ostream& sink) {
  const auto g = load_graph(path);
  sink << render_matrix(generate_instance(g, seed, range));
  return kExitOk;
}

int cmd_selftest(std::ostream& sink) {
  std::size_t failed = 0;
  const auto results = run_selftest();
  for (const auto& r : results) {
    if (r.passed) {
      sink << "PASS " << r.name << ": " << r.observed << '\n';
    } else {
      ++failed;
      sink << "FAIL " << r.name << ": expected " << r.expected << ", got " << r.observed << '\n';
    }
  }
  sink << results.size() - failed << "/" << results.size() << " passed\n";
  return failed == 0 ? kExitOk : kExitFalse;
}

int cmd_verify(const std::string& path, std::ostream& sink) {
  json report;
  try {
    report = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  const auto check = verify_report(report);
  sink << (check.ok ? "ok: " : "failed: ") << check.message << '\n';
  return check.ok ? kExitOk : kExitFalse;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Completely positive matrices over the min-plus semiring", "tropcp"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  auto add_io = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", input, what)->required();
    sub->add_option("-o,--output", output, "Write to this file instead of standard output");
  };

  auto* check = app.add_subcommand("check", "Test complete positivity");
  add_io(check, "Matrix file");
  auto* norm = app.add_subcommand("normalize", "Print the normalized matrix C(A)");
  add_io(norm, "Matrix file");
  bool norm_json = false;
  norm->add_flag("--json", norm_json, "Emit a JSON report with the deleted rows and shifts");
  auto* graph = app.add_subcommand("graph", "Pattern graph and its diameter");
  add_io(graph, "Matrix or graph file");
  auto* bound = app.add_subcommand("bound", "Minimum-theta clique cover and the rank upper bound");
  add_io(bound, "Matrix or graph file");
  auto* decomp = app.add_subcommand("decompose", "Constructive decomposition from a clique cover");
  add_io(decomp, "Matrix file");

  auto* rank = app.add_subcommand("rank", "Exact CP-rank by search");
  add_io(rank, "Matrix file");
  RankOptions rank_opts;
  rank->add_option("--max-r", rank_opts.max_r, "Largest rank to try (default: the theta bound)");
  rank->add_option("--node-limit", rank_opts.node_limit, "Search node budget per value of r")
      ->check(CLI::PositiveNumber);
  rank->add_option("--timeout-s", rank_opts.timeout_s, "Wall-clock budget per value of r")
      ->check(CLI::PositiveNumber);
  rank->add_option("--threads", rank_opts.threads, "Worker threads (default: TROPCP_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  auto* cc = app.add_subcommand("cc", "Edge clique cover number");
  add_io(cc, "Matrix or graph file");

  auto* witness = app.add_subcommand("witness", "Witness matrix for a non-adjacent pair");
  add_io(witness, "Graph file");
  std::vector<std::size_t> pair;
  witness->add_option("--pair", pair, "Two 1-based vertices")->expected(2)->required();

  auto* gen = app.add_subcommand("gen", "Random normalized CP matrix with a given pattern");
  add_io(gen, "Graph file");
  std::uint64_t seed = 1;
  EntryRange range;
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--max-numerator", range.max_numerator, "Entries are p/q with p at most this")
      ->check(CLI::PositiveNumber);
  gen->add_option("--max-denominator", range.max_denominator, "and q at most this")
      ->check(CLI::PositiveNumber);
  gen->add_option("--infinity-percent", range.infinity_percent, "Chance of an infinite entry")
      ->check(CLI::Range(0, 100));

  auto* selftest = app.add_subcommand("selftest", "Run the built-in example corpus");
  selftest->add_option("-o,--output", output, "Write to this file instead of standard output");
  auto* verify = app.add_subcommand("verify", "Re-verify the certificate in a JSON report");
  add_io(verify, "Report file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!output.empty()) {
    file.open(output, std::ios::binary);
    if (!file) {
      err << "tropcp: cannot write " << output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = output.empty() ? out : file;

  try {
    if (*check) return cmd_check(input, sink);
    if (*norm) return cmd_normalize(input, norm_json, sink, err);
    if (*graph) return cmd_graph(input, sink);
    if (*bound) return cmd_bound(input, sink, err);
    if (*decomp) return cmd_decompose(input, sink, err);
    if (*rank) return cmd_rank(input, rank_opts, sink);
    if (*cc) return cmd_cc(input, sink);
    if (*witness) return cmd_witness(input, pair, sink);
    if (*gen) return cmd_gen(input, seed, range, sink);
    if (*selftest) return cmd_selftest(sink);
    if (*verify) return cmd_verify(input, sink);
  } catch (const ParseError& e) {
    err << "tropcp: " << input << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "tropcp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "tropcp: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "tropcp: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tropcp
