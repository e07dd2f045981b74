// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lfrac {

/// Runs the command-line front end. Exit codes: 0 success, 1 usage or parse
/// error, 2 invariant violation, 3 float overflow, 4 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfrac
