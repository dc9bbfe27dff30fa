// Copyright (c) tropcp contributors.
// SPDX-License-Identifier: Apache-2.0

// The tropcp command line, callable in-process for testing.

#ifndef TROPCP_CLI_HPP
#define TROPCP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tropcp {

inline constexpr int kExitOk = 0;
/// The property asked about is false, e.g. the matrix is not CP.
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;
/// A search limit stopped the computation before an answer.
inline constexpr int kExitUndetermined = 3;

/// args excludes the program name. Reports and matrices go to out (or the
/// file named by -o), diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropcp

#endif  // TROPCP_CLI_HPP
