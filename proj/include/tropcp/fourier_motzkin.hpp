// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#ifndef TROPCP_FOURIER_MOTZKIN_HPP
#define TROPCP_FOURIER_MOTZKIN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcp/trop_core.hpp"

namespace tropcp {

/// Σ coefficients[j] · x_j >= rhs.
struct LinearInequality {
  std::vector<Rational> coefficients;
  Rational rhs;
};

/// Exact Fourier–Motzkin elimination with back-substitution. Returns a point
/// satisfying every inequality, or nullopt when the system is infeasible.
/// Each variable takes the largest lower bound available at its stage, so
/// the point is deterministic. Intended for a handful of variables.
std::optional<std::vector<Rational>> fourier_motzkin_solve(
    const std::vector<LinearInequality>& system, std::size_t variables);

}  // namespace tropcp

#endif  // TROPCP_FOURIER_MOTZKIN_HPP
