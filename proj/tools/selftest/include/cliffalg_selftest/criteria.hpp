#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cliffalg::selftest {

struct Outcome {
  bool passed = false;
  std::string detail;
  /// First failing input, when there is one.
  nlohmann::json counterexample;
};

struct Criterion {
  int id = 0;
  std::string title;
  double budget_seconds = 0;
  std::function<Outcome(std::uint64_t seed)> run;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  Outcome outcome;
  double seconds = 0;
  double budget_seconds = 0;

  bool within_budget() const noexcept { return seconds <= budget_seconds; }
  bool passed() const noexcept { return outcome.passed && within_budget(); }
};

/// Acceptance criteria 1 to 10, in order.
const std::vector<Criterion>& criteria();

CriterionResult run_criterion(const Criterion& c, std::uint64_t seed);

}  // namespace cliffalg::selftest
