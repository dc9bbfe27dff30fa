// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

namespace tropcp {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                         what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    for (std::size_t i = 0; i < raw.size();) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    const bool comment = !line.tokens.empty() && line.tokens.front().text.starts_with('#');
    if (!line.tokens.empty() && !comment) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::size_t parse_count(const Token& token, std::size_t line, const char* what) {
  std::size_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(line, token.column, std::string("expected ") + what + ", got '" + token.text + "'");
  return value;
}

}  // namespace

TropScalar parse_scalar(std::string_view token) {
  static const std::regex integer(R"([+-]?[0-9]+)");
  static const std::regex fraction(R"([+-]?[0-9]+/[0-9]+)");
  static const std::regex decimal(R"(([+-]?)([0-9]+)\.([0-9]+))");
  const std::string s(token);
  if (s == "inf") return TropScalar::infinity();
  std::string unsigned_part = s;
  if (!unsigned_part.empty() && unsigned_part.front() == '+') unsigned_part.erase(0, 1);
  if (std::regex_match(s, integer)) return TropScalar(Rational(mpz_class(unsigned_part, 10)));
  if (std::regex_match(s, fraction)) {
    const auto slash = unsigned_part.find('/');
    const mpz_class den(unsigned_part.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(mpz_class(unsigned_part.substr(0, slash), 10), den);
    q.canonicalize();
    return TropScalar(q);
  }
  std::smatch m;
  if (std::regex_match(s, m, decimal)) {
    const std::string digits = m[2].str() + m[3].str();
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, m[3].length());
    Rational q(mpz_class(digits, 10), scale);
    q.canonicalize();
    if (m[1].str() == "-") q = -q;
    return TropScalar(q);
  }
  throw std::invalid_argument("malformed entry '" + s + "'");
}

std::string render_scalar(const TropScalar& x) { return x.to_string(); }

SymTropMatrix parse_matrix(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "empty matrix file");
  const Line& header = lines.front();
  if (header.tokens.size() != 1)
    throw ParseError(header.number, 0, "first line must hold the dimension alone");
  const std::size_t n = parse_count(header.tokens.front(), header.number, "a dimension");
  if (lines.size() - 1 != n) {
    const std::size_t where = lines.size() - 1 > n ? lines[n + 1].number : lines.back().number;
    throw ParseError(where, 0,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }

  std::vector<std::vector<TropScalar>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& line = lines[i + 1];
    if (line.tokens.size() != n)
      throw ParseError(line.number, 0,
                       "row " + std::to_string(i + 1) + " has " + std::to_string(line.tokens.size()) +
                           " entries, expected " + std::to_string(n));
    for (const auto& token : line.tokens) {
      try {
        rows[i].push_back(parse_scalar(token.text));
      } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, token.column, e.what());
      }
    }
  }
  try {
    return SymTropMatrix::from_rows(rows);
  } catch (const AsymmetryError& e) {
    const Line& line = lines[e.row()];
    throw ParseError(line.number, line.tokens[e.column() - 1].column,
                     "entry (" + std::to_string(e.row()) + ", " + std::to_string(e.column()) +
                         ") differs from its mirror");
  }
}

std::string render_matrix(const SymTropMatrix& a) {
  std::string out = std::to_string(a.dimension()) + "\n";
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < a.dimension(); ++j) {
      if (j) out += ' ';
      out += render_scalar(a(i, j));
    }
    out += '\n';
  }
  return out;
}

PatternGraph parse_graph(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "empty graph file");
  const Line& header = lines.front();
  if (header.tokens.size() != 2) throw ParseError(header.number, 0, "first line must be 'n m'");
  const std::size_t n = parse_count(header.tokens[0], header.number, "a vertex count");
  const std::size_t m = parse_count(header.tokens[1], header.number, "an edge count");
  if (n > kMaxGraphOrder)
    throw ParseError(header.number, header.tokens[0].column, "at most 64 vertices are supported");
  if (lines.size() - 1 != m)
    throw ParseError(lines.back().number, 0,
                     "expected " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    const Line& line = lines[e + 1];
    if (line.tokens.size() != 2) throw ParseError(line.number, 0, "an edge line must be 'i j'");
    const std::size_t u = parse_count(line.tokens[0], line.number, "a vertex");
    const std::size_t v = parse_count(line.tokens[1], line.number, "a vertex");
    for (const auto& [x, token] : {std::pair{u, line.tokens[0]}, std::pair{v, line.tokens[1]}})
      if (x < 1 || x > n)
        throw ParseError(line.number, token.column, "vertex " + std::to_string(x) + " out of range");
    if (u == v) throw ParseError(line.number, line.tokens[1].column, "loops are not allowed");
    edges.emplace_back(u - 1, v - 1);
  }
  return PatternGraph(n, edges);
}

std::string render_graph(const PatternGraph& g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

FileKind detect_file_kind(std::string_view text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError(1, 0, "empty file");
  switch (lines.front().tokens.size()) {
    case 1: return FileKind::kMatrix;
    case 2: return FileKind::kGraph;
    default: throw ParseError(lines.front().number, 0, "first line must be 'n' or 'n m'");
  }
}

std::vector<std::string> render_vector(const TropVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(render_scalar(x));
  return out;
}

TropVector parse_vector(const std::vector<std::string>& tokens) {
  std::vector<TropScalar> entries;
  for (const auto& t : tokens) entries.push_back(parse_scalar(t));
  return TropVector(std::move(entries));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace tropcp
