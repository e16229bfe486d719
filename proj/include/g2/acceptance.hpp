#pragma once

/**
 * @file acceptance.hpp
 * @brief The seven end-to-end acceptance criteria, shared by the acceptance
 * test binary and `g2skein selftest`.
 */

#include <string>
#include <vector>

namespace g2 {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  std::vector<std::string> misses;  // empty when passed
};

/// Runs criterion `id` (1..7). Exceptions inside a criterion count as misses.
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance();

/// `criterion <id> <pass|fail> <title>`, optionally followed by ` (<seconds> s)`;
/// misses indented below.
std::string render(const CriterionResult& r, bool with_time = true);

}  // namespace g2
