// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/cp_analysis.hpp"

namespace tropcp {

namespace {

TropScalar shifted(const TropScalar& x, const Rational& delta) {
  if (x.is_infinite()) return x;
  return TropScalar(Rational(x.value() + delta));
}

}  // namespace

bool is_completely_positive(const SymTropMatrix& a) {
  const std::size_t n = a.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const TropScalar twice = trop_mul(a(i, j), a(i, j));
      if (twice < trop_mul(a(i, i), a(j, j))) return false;
    }
  }
  return true;
}

bool cp_rank_is_one(const SymTropMatrix& a) {
  if (!is_completely_positive(a))
    throw NotCompletelyPositive("rank-one test needs a completely positive matrix");
  const std::size_t n = a.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j1 = 0; j1 < n; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < n; ++j2)
          if (trop_mul(a(i, j1), a(k, j2)) != trop_mul(a(k, j1), a(i, j2))) return false;
  return true;
}

TropVector extract_rank_one_factor(const SymTropMatrix& a) {
  const std::size_t n = a.dimension();
  std::size_t anchor = n;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(j, j).is_finite()) {
      anchor = j;
      break;
    }
  }
  if (anchor == n) {
    if (a != SymTropMatrix::all_infinite(n))
      throw std::invalid_argument("matrix does not have CP-rank one");
    return TropVector::all_infinite(n);
  }
  const Rational half_diag = a(anchor, anchor).value() / 2;
  std::vector<TropScalar> entries;
  entries.reserve(n);
  for (std::size_t j = 0; j < n; ++j) entries.push_back(shifted(a(j, anchor), -half_diag));
  TropVector b(std::move(entries));
  if (rank_one_product(b) != a) throw std::invalid_argument("matrix does not have CP-rank one");
  return b;
}

Normalized normalize(const SymTropMatrix& a) {
  if (!is_completely_positive(a))
    throw NotCompletelyPositive("normalization needs a completely positive matrix");
  NormalizationRecord record;
  record.original_dimension = a.dimension();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a(i, i).is_infinite()) {
      record.deleted_indices.push_back(i);
    } else {
      record.kept_indices.push_back(i);
      record.shifts.push_back(a(i, i).value() / 2);
    }
  }
  const auto& kept = record.kept_indices;
  const auto& shifts = record.shifts;
  auto matrix = SymTropMatrix::from_function(kept.size(), [&](std::size_t i, std::size_t j) {
    return shifted(a(kept[i], kept[j]), -(shifts[i] + shifts[j]));
  });
  return {std::move(matrix), std::move(record)};
}

SymTropMatrix NormalizationRecord::restore(const SymTropMatrix& normalized) const {
  if (normalized.dimension() != kept_indices.size())
    throw std::invalid_argument("normalized matrix does not match the record");
  std::vector<std::ptrdiff_t> position(original_dimension, -1);
  for (std::size_t i = 0; i < kept_indices.size(); ++i)
    position[kept_indices[i]] = static_cast<std::ptrdiff_t>(i);
  return SymTropMatrix::from_function(original_dimension, [&](std::size_t i, std::size_t j) {
    if (position[i] < 0 || position[j] < 0) return TropScalar::infinity();
    const auto pi = static_cast<std::size_t>(position[i]);
    const auto pj = static_cast<std::size_t>(position[j]);
    return shifted(normalized(pi, pj), shifts[pi] + shifts[pj]);
  });
}

TropVector NormalizationRecord::lift(const TropVector& factor) const {
  if (factor.size() != kept_indices.size())
    throw std::invalid_argument("factor does not match the record");
  std::vector<TropScalar> entries(original_dimension);
  for (std::size_t i = 0; i < kept_indices.size(); ++i)
    entries[kept_indices[i]] = shifted(factor[i], shifts[i]);
  return TropVector(std::move(entries));
}

Decomposition NormalizationRecord::lift(const Decomposition& d) const {
  std::vector<TropVector> factors;
  factors.reserve(d.rank());
  for (const auto& b : d.factors()) factors.push_back(lift(b));
  // Every row was deleted: the original is all-∞, certified by one ∞ factor.
  if (factors.empty() && original_dimension > 0)
    factors.push_back(TropVector::all_infinite(original_dimension));
  return Decomposition(restore(d.target()), std::move(factors));
}

bool is_normalized(const SymTropMatrix& a) {
  const std::size_t n = a.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    if (!a(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) < TropScalar(0L)) return false;
  }
  return true;
}

SymTropMatrix support(const SymTropMatrix& a) {
  return SymTropMatrix::from_function(a.dimension(), [&](std::size_t i, std::size_t j) {
    return TropScalar(a(i, j).is_zero() ? 0L : 1L);
  });
}

}  // namespace tropcp
