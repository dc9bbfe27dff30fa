// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/report.hpp"

#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "tropcp/matrix_io.hpp"

namespace tropcp {

using nlohmann::json;

std::string digest(std::string_view canonical_text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : canonical_text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

std::string matrix_digest(const SymTropMatrix& a) { return digest(render_matrix(a)); }
std::string graph_digest(const PatternGraph& g) { return digest(render_graph(g)); }

json matrix_to_json(const SymTropMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dimension(); ++j) row.push_back(render_scalar(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SymTropMatrix matrix_from_json(const json& rows) {
  if (!rows.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::vector<std::vector<TropScalar>> parsed;
  for (const auto& row : rows) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    auto& out = parsed.emplace_back();
    for (const auto& token : row) {
      if (!token.is_string()) throw std::invalid_argument("matrix entries must be strings");
      out.push_back(parse_scalar(token.get<std::string>()));
    }
  }
  return SymTropMatrix::from_rows(parsed);
}

json decomposition_to_json(const Decomposition& d) {
  json factors = json::array();
  for (const auto& f : d.factors()) factors.push_back(render_vector(f));
  return {{"rank", d.rank()}, {"factors", std::move(factors)}};
}

json make_report(std::string_view operation, const SymTropMatrix& input) {
  return {{"schema", kReportSchema},
          {"operation", operation},
          {"input",
           {{"kind", "matrix"},
            {"dimension", input.dimension()},
            {"digest", matrix_digest(input)},
            {"matrix", matrix_to_json(input)}}}};
}

json make_report(std::string_view operation, const PatternGraph& input) {
  json edges = json::array();
  for (const auto& [u, v] : input.edges()) edges.push_back({u + 1, v + 1});
  return {{"schema", kReportSchema},
          {"operation", operation},
          {"input",
           {{"kind", "graph"},
            {"order", input.order()},
            {"digest", graph_digest(input)},
            {"edges", std::move(edges)}}}};
}

ReportCheck verify_report(const json& report) {
  try {
    if (report.value("schema", "") != kReportSchema) return {false, "unknown schema"};
    const json& input = report.at("input");
    if (input.at("kind") != "matrix") return {true, "no certificate to verify"};
    const SymTropMatrix a = matrix_from_json(input.at("matrix"));
    if (matrix_digest(a) != input.at("digest").get<std::string>())
      return {false, "input digest does not match the embedded matrix"};
    if (!report.contains("certificate")) return {true, "digest matches; no certificate"};
    std::vector<TropVector> factors;
    for (const auto& f : report.at("certificate").at("factors"))
      factors.push_back(parse_vector(f.get<std::vector<std::string>>()));
    if (report["certificate"].contains("rank") &&
        report["certificate"]["rank"].get<std::size_t>() != factors.size())
      return {false, "certificate rank disagrees with its factor count"};
    if (report.contains("result") && report["result"].contains("rank") &&
        report["result"]["rank"].is_number() &&
        report["result"]["rank"].get<std::size_t>() != factors.size())
      return {false, "reported rank disagrees with the certificate"};
    if (!verify_decomposition(a, factors)) return {false, "factors do not reconstruct the matrix"};
    return {true, "certificate with " + std::to_string(factors.size()) + " factors verified"};
  } catch (const std::exception& e) {
    return {false, std::string("malformed report: ") + e.what()};
  }
}

}  // namespace tropcp
