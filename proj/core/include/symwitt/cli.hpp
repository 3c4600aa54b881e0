// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SYMWITT_CLI_HPP
#define SYMWITT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace symwitt::cli {

/// Run the command-line interface on the given arguments (without the
/// program name).  Exit codes: 0 ok, 1 check failure, 2 usage error,
/// 3 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symwitt::cli

#endif
