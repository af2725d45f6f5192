#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace morlog::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  /// Name of the identity being checked.
  std::string anchor;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

constexpr int kCriterionCount = 13;

/// Runs one criterion (1..13). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, uint64_t seed);
std::vector<CriterionResult> run_acceptance(uint64_t seed);

}  // namespace morlog::verify
