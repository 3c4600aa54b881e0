// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-contained identity suites, one per module, runnable from the CLI
// (`check --all`) and from the test binaries.  Deterministic: fixed seeds,
// exact arithmetic throughout.

#ifndef SYMWITT_CHECKS_HPP
#define SYMWITT_CHECKS_HPP

#include <string>
#include <vector>

namespace symwitt {

struct CheckOutcome {
  std::string suite;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<std::string> check_suite_names();
std::vector<CheckOutcome> run_check_suite(const std::string& suite);
std::vector<CheckOutcome> run_all_checks();

/// Fixed golden corpus of expression strings for parser round trips.
const std::vector<std::string>& expression_corpus();

}  // namespace symwitt

#endif
