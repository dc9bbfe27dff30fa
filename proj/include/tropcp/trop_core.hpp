// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Exact min-plus scalars, vectors and symmetric matrices.
//
// Tropical addition is min and tropical multiplication is ordinary addition.
// Every finite value is an arbitrary-precision rational held in lowest terms,
// so zero tests and ties are decided exactly.

#ifndef TROPCP_TROP_CORE_HPP
#define TROPCP_TROP_CORE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tropcp {

using Rational = mpq_class;

/// An element of R ∪ {∞}. ∞ is the greatest element, the identity for ⊕
/// and absorbing for ⊙.
class TropScalar {
 public:
  /// The tropical additive identity ∞.
  TropScalar() = default;
  TropScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  TropScalar(long value);             // NOLINT(google-explicit-constructor)

  static TropScalar infinity() { return TropScalar(); }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }

  /// Finite value; throws std::domain_error on ∞.
  const Rational& value() const;

  /// "inf", an integer, or "p/q" in lowest terms.
  std::string to_string() const;

  friend bool operator==(const TropScalar& a, const TropScalar& b);
  friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

 private:
  bool infinite_ = true;
  Rational value_;
};

/// a ⊕ b = min(a, b).
TropScalar trop_add(const TropScalar& a, const TropScalar& b);
/// a ⊙ b = a + b, ∞ if either side is ∞.
TropScalar trop_mul(const TropScalar& a, const TropScalar& b);

/// Fixed-length vector over the tropical semiring.
class TropVector {
 public:
  TropVector() = default;
  explicit TropVector(std::vector<TropScalar> entries) : entries_(std::move(entries)) {}
  TropVector(std::initializer_list<TropScalar> entries) : entries_(entries) {}

  static TropVector all_infinite(std::size_t n) { return TropVector(std::vector<TropScalar>(n)); }

  std::size_t size() const { return entries_.size(); }
  const TropScalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const TropScalar> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_all_infinite() const;

  friend bool operator==(const TropVector&, const TropVector&) = default;

 private:
  std::vector<TropScalar> entries_;
};

/// Symmetric n×n tropical matrix with packed upper-triangular storage.
class SymTropMatrix {
 public:
  SymTropMatrix() = default;

  /// Build from f(i, j), called once for each i <= j.
  static SymTropMatrix from_function(std::size_t n,
                                     const std::function<TropScalar(std::size_t, std::size_t)>& f);
  /// Build from full rows. Throws AsymmetryError naming the first offending
  /// (row, column) pair, 1-based, and std::invalid_argument for ragged rows.
  static SymTropMatrix from_rows(const std::vector<std::vector<TropScalar>>& rows);
  static SymTropMatrix zero(std::size_t n);
  static SymTropMatrix all_infinite(std::size_t n);

  std::size_t dimension() const { return n_; }
  const TropScalar& operator()(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }

  /// result(i, j) = (*this)(indices[i], indices[j]).
  SymTropMatrix submatrix(std::span<const std::size_t> indices) const;

  friend bool operator==(const SymTropMatrix&, const SymTropMatrix&) = default;

 private:
  SymTropMatrix(std::size_t n, std::vector<TropScalar> packed) : n_(n), entries_(std::move(packed)) {}

  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return i * (2 * n_ - i + 1) / 2 + (j - i);
  }

  std::size_t n_ = 0;
  std::vector<TropScalar> entries_;
};

class AsymmetryError : public std::invalid_argument {
 public:
  AsymmetryError(std::size_t row, std::size_t column);
  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// M(k, l) = b_k ⊙ b_l.
SymTropMatrix rank_one_product(const TropVector& b);

/// Entrywise ⊕ of equally sized matrices. Throws std::invalid_argument on a
/// dimension mismatch or an empty list.
SymTropMatrix trop_matrix_sum(std::span<const SymTropMatrix> ms);

/// True iff b_k + b_l >= target(k, l) for every entry.
bool outer_product_dominates(const TropVector& b, const SymTropMatrix& target);

/// True iff every factor has the target's length and ⊕ b⊙bᵀ equals the
/// target exactly. An empty factor list sums to the all-∞ matrix.
bool verify_decomposition(const SymTropMatrix& target, std::span<const TropVector> factors);

/// A = ⊕ b_i ⊙ b_iᵀ, checked on construction.
class Decomposition {
 public:
  /// Throws std::invalid_argument unless the factors reconstruct the target.
  Decomposition(SymTropMatrix target, std::vector<TropVector> factors);

  const SymTropMatrix& target() const { return target_; }
  const std::vector<TropVector>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }

  bool verify() const { return verify_decomposition(target_, factors_); }

 private:
  SymTropMatrix target_;
  std::vector<TropVector> factors_;
};

}  // namespace tropcp

#endif  // TROPCP_TROP_CORE_HPP
