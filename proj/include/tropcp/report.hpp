// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// JSON reports. Every report names its schema, the operation, and the input
// with a digest of its canonical rendering. Decompositions are stored as
// factor lists in the matrix token grammar next to the input matrix, so a
// report can be re-verified on its own.

#ifndef TROPCP_REPORT_HPP
#define TROPCP_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "tropcp/pattern_graphs.hpp"
#include "tropcp/trop_core.hpp"

namespace tropcp {

inline constexpr std::string_view kReportSchema = "tropcp.report/1";

/// "fnv1a64:" and 16 hex digits over the canonical rendering.
std::string digest(std::string_view canonical_text);
std::string matrix_digest(const SymTropMatrix& a);
std::string graph_digest(const PatternGraph& g);

nlohmann::json matrix_to_json(const SymTropMatrix& a);
/// Throws std::invalid_argument on malformed rows or tokens.
SymTropMatrix matrix_from_json(const nlohmann::json& rows);

nlohmann::json decomposition_to_json(const Decomposition& d);

/// Skeleton with schema, operation and input block.
nlohmann::json make_report(std::string_view operation, const SymTropMatrix& input);
nlohmann::json make_report(std::string_view operation, const PatternGraph& input);

struct ReportCheck {
  bool ok = false;
  std::string message;
};

/// Check the schema, the input digest, and every embedded certificate.
ReportCheck verify_report(const nlohmann::json& report);

}  // namespace tropcp

#endif  // TROPCP_REPORT_HPP
