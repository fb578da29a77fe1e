// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.
// Failing criteria are followed by their measured-vs-expected rows.
// Usage: sarforge_acceptance [--verbose]

#include <cstring>
#include <iostream>

#include "sarforge/validation/acceptance.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "--verbose") == 0;
  std::size_t failed = 0;
  sarforge::validation::run_all({}, [&](const sarforge::validation::CriterionResult& r) {
    if (!r.pass()) ++failed;
    if (verbose || !r.pass())
      sarforge::validation::print_table(std::cout, r);
    else
      std::cout << sarforge::validation::summary_line(r) << "\n";
    std::cout.flush();
  });
  std::cout << (failed == 0 ? "all 9 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
