// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

#include "tropcp/generate.hpp"

#include <random>
#include <stdexcept>

namespace tropcp {

SymTropMatrix generate_instance(const PatternGraph& g, std::uint64_t seed, const EntryRange& range) {
  if (range.max_numerator == 0 || range.max_denominator == 0)
    throw std::invalid_argument("entry bounds must be positive");
  if (range.infinity_percent > 100) throw std::invalid_argument("infinity_percent is a percentage");
  // Distributions are implementation-defined; reduce the engine output by
  // hand so the bytes do not depend on the standard library.
  std::mt19937_64 engine(seed);
  auto draw = [&](std::uint64_t bound) { return engine() % bound; };
  return SymTropMatrix::from_function(g.order(), [&](std::size_t i, std::size_t j) -> TropScalar {
    if (i == j || g.adjacent(i, j)) return 0L;
    if (draw(100) < range.infinity_percent) return TropScalar::infinity();
    const auto p = static_cast<long>(draw(range.max_numerator) + 1);
    const auto q = static_cast<long>(draw(range.max_denominator) + 1);
    Rational value(p, q);
    value.canonicalize();
    return value;
  });
}

}  // namespace tropcp
