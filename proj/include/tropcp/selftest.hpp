// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// Built-in corpus of worked examples, each with its known value.

#ifndef TROPCP_SELFTEST_HPP
#define TROPCP_SELFTEST_HPP

#include <string>
#include <vector>

namespace tropcp {

struct SelftestResult {
  std::string name;
  std::string expected;
  std::string observed;
  bool passed = false;
};

std::vector<SelftestResult> run_selftest();

}  // namespace tropcp

#endif  // TROPCP_SELFTEST_HPP
