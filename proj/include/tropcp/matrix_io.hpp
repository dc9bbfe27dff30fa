// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Text formats.
//
// Matrix file: the dimension n on the first line, then n rows of n
// whitespace-separated tokens. A token is `inf`, an integer, `p/q`, or a
// finite decimal such as `-0.25`; decimals are read exactly.
//
// Graph file: `n m` on the first line, then m lines `i j` with 1-based
// endpoints.
//
// Blank lines and lines starting with `#` are skipped. Rendering is
// canonical: single spaces, lowest-terms fractions, a trailing newline.

#ifndef TROPCP_MATRIX_IO_HPP
#define TROPCP_MATRIX_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tropcp/pattern_graphs.hpp"
#include "tropcp/trop_core.hpp"

namespace tropcp {

/// Malformed input, located by 1-based line and column (column 0 when the
/// whole line is at fault).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Throws std::invalid_argument on a malformed token.
TropScalar parse_scalar(std::string_view token);
std::string render_scalar(const TropScalar& x);

SymTropMatrix parse_matrix(std::string_view text);
std::string render_matrix(const SymTropMatrix& a);

PatternGraph parse_graph(std::string_view text);
std::string render_graph(const PatternGraph& g);

enum class FileKind { kMatrix, kGraph };

/// Matrix files start with one token, graph files with two.
FileKind detect_file_kind(std::string_view text);

std::vector<std::string> render_vector(const TropVector& v);
/// Throws std::invalid_argument on a malformed token.
TropVector parse_vector(const std::vector<std::string>& tokens);

/// Whole file contents; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

}  // namespace tropcp

#endif  // TROPCP_MATRIX_IO_HPP
