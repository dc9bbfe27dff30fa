// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/fourier_motzkin.hpp"

#include <map>
#include <stdexcept>

namespace tropcp {

namespace {

using Stage = std::vector<LinearInequality>;

// Scale each row so its first nonzero coefficient is ±1 and keep only the
// tightest rhs per direction. Returns false on a constant row 0 >= rhs > 0.
bool normalize_rows(const Stage& rows, Stage& out) {
  std::map<std::vector<Rational>, Rational> tightest;
  for (const auto& row : rows) {
    std::size_t lead = 0;
    while (lead < row.coefficients.size() && sgn(row.coefficients[lead]) == 0) ++lead;
    if (lead == row.coefficients.size()) {
      if (sgn(row.rhs) > 0) return false;
      continue;
    }
    const Rational scale = abs(row.coefficients[lead]);
    std::vector<Rational> key(row.coefficients.size());
    for (std::size_t j = 0; j < key.size(); ++j) key[j] = row.coefficients[j] / scale;
    Rational rhs = row.rhs / scale;
    auto [it, inserted] = tightest.try_emplace(std::move(key), rhs);
    if (!inserted && it->second < rhs) it->second = rhs;
  }
  out.clear();
  out.reserve(tightest.size());
  for (auto& [coefficients, rhs] : tightest) out.push_back({coefficients, rhs});
  return true;
}

}  // namespace

std::optional<std::vector<Rational>> fourier_motzkin_solve(
    const std::vector<LinearInequality>& system, std::size_t variables) {
  for (const auto& row : system)
    if (row.coefficients.size() != variables)
      throw std::invalid_argument("inequality has the wrong number of coefficients");

  // stages[s] still mentions variables 0 .. variables-1-s.
  std::vector<Stage> stages(1);
  if (!normalize_rows(system, stages[0])) return std::nullopt;
  for (std::size_t v = variables; v-- > 0;) {
    const Stage& current = stages.back();
    Stage next;
    std::vector<const LinearInequality*> lower;
    std::vector<const LinearInequality*> upper;
    for (const auto& row : current) {
      const int s = sgn(row.coefficients[v]);
      if (s > 0)
        lower.push_back(&row);
      else if (s < 0)
        upper.push_back(&row);
      else
        next.push_back(row);
    }
    for (const auto* lo : lower) {
      for (const auto* hi : upper) {
        const Rational lo_weight = -hi->coefficients[v];
        const Rational hi_weight = lo->coefficients[v];
        LinearInequality combined{std::vector<Rational>(variables), 0};
        for (std::size_t j = 0; j < variables; ++j)
          combined.coefficients[j] = lo_weight * lo->coefficients[j] + hi_weight * hi->coefficients[j];
        combined.coefficients[v] = 0;
        combined.rhs = lo_weight * lo->rhs + hi_weight * hi->rhs;
        next.push_back(std::move(combined));
      }
    }
    Stage reduced;
    if (!normalize_rows(next, reduced)) return std::nullopt;
    stages.push_back(std::move(reduced));
  }

  std::vector<Rational> x(variables);
  for (std::size_t v = 0; v < variables; ++v) {
    const Stage& stage = stages[variables - 1 - v];
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& row : stage) {
      const Rational& c = row.coefficients[v];
      if (sgn(c) == 0) continue;
      Rational rest = row.rhs;
      for (std::size_t u = 0; u < v; ++u) rest -= row.coefficients[u] * x[u];
      const Rational bound = rest / c;
      if (sgn(c) > 0) {
        if (!lo || *lo < bound) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi && *hi < *lo) return std::nullopt;  // unreachable for a consistent elimination
    x[v] = lo ? *lo : (hi ? *hi : Rational(0));
  }
  return x;
}

}  // namespace tropcp
