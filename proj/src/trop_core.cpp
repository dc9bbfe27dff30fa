// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/trop_core.hpp"

#include <algorithm>

namespace tropcp {

TropScalar::TropScalar(const Rational& value) : infinite_(false), value_(value) {
  value_.canonicalize();
}

TropScalar::TropScalar(long value) : infinite_(false), value_(value) {}

const Rational& TropScalar::value() const {
  if (infinite_) throw std::domain_error("value() of tropical infinity");
  return value_;
}

std::string TropScalar::to_string() const {
  return infinite_ ? std::string("inf") : value_.get_str();
}

bool operator==(const TropScalar& a, const TropScalar& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
  if (a.infinite_ || b.infinite_) {
    return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
  }
  return cmp(a.value_, b.value_) <=> 0;
}

TropScalar trop_add(const TropScalar& a, const TropScalar& b) { return b < a ? b : a; }

TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
  if (a.is_infinite() || b.is_infinite()) return TropScalar::infinity();
  return TropScalar(Rational(a.value() + b.value()));
}

bool TropVector::is_all_infinite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TropScalar& x) { return x.is_infinite(); });
}

AsymmetryError::AsymmetryError(std::size_t row, std::size_t column)
    : std::invalid_argument("matrix is not symmetric at row " + std::to_string(row) +
                            ", column " + std::to_string(column)),
      row_(row),
      column_(column) {}

SymTropMatrix SymTropMatrix::from_function(
    std::size_t n, const std::function<TropScalar(std::size_t, std::size_t)>& f) {
  std::vector<TropScalar> packed;
  packed.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) packed.push_back(f(i, j));
  return SymTropMatrix(n, std::move(packed));
}

SymTropMatrix SymTropMatrix::from_rows(const std::vector<std::vector<TropScalar>>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rows[i][j] != rows[j][i]) throw AsymmetryError(j + 1, i + 1);
  return from_function(n, [&](std::size_t i, std::size_t j) { return rows[i][j]; });
}

SymTropMatrix SymTropMatrix::zero(std::size_t n) {
  return from_function(n, [](std::size_t, std::size_t) { return TropScalar(0L); });
}

SymTropMatrix SymTropMatrix::all_infinite(std::size_t n) {
  return SymTropMatrix(n, std::vector<TropScalar>(n * (n + 1) / 2));
}

SymTropMatrix SymTropMatrix::submatrix(std::span<const std::size_t> indices) const {
  for (std::size_t idx : indices)
    if (idx >= n_) throw std::out_of_range("submatrix index out of range");
  return from_function(indices.size(), [&](std::size_t i, std::size_t j) {
    return (*this)(indices[i], indices[j]);
  });
}

SymTropMatrix rank_one_product(const TropVector& b) {
  return SymTropMatrix::from_function(
      b.size(), [&](std::size_t k, std::size_t l) { return trop_mul(b[k], b[l]); });
}

SymTropMatrix trop_matrix_sum(std::span<const SymTropMatrix> ms) {
  if (ms.empty()) throw std::invalid_argument("trop_matrix_sum of an empty list");
  const std::size_t n = ms.front().dimension();
  for (const auto& m : ms)
    if (m.dimension() != n) throw std::invalid_argument("trop_matrix_sum: dimension mismatch");
  return SymTropMatrix::from_function(n, [&](std::size_t i, std::size_t j) {
    TropScalar acc = TropScalar::infinity();
    for (const auto& m : ms) acc = trop_add(acc, m(i, j));
    return acc;
  });
}

bool outer_product_dominates(const TropVector& b, const SymTropMatrix& target) {
  const std::size_t n = target.dimension();
  if (b.size() != n) return false;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k; l < n; ++l)
      if (trop_mul(b[k], b[l]) < target(k, l)) return false;
  return true;
}

bool verify_decomposition(const SymTropMatrix& target, std::span<const TropVector> factors) {
  const std::size_t n = target.dimension();
  for (const auto& b : factors)
    if (b.size() != n) return false;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k; l < n; ++l) {
      TropScalar acc = TropScalar::infinity();
      for (const auto& b : factors) acc = trop_add(acc, trop_mul(b[k], b[l]));
      if (acc != target(k, l)) return false;
    }
  }
  return true;
}

Decomposition::Decomposition(SymTropMatrix target, std::vector<TropVector> factors)
    : target_(std::move(target)), factors_(std::move(factors)) {
  if (!verify_decomposition(target_, factors_))
    throw std::invalid_argument("factors do not reconstruct the target matrix");
}

}  // namespace tropcp
