#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace catkit {

struct SuiteFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // splitmix64(suite seed ^ trial)
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty() && trials > 0; }
};

/// Names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();

/// Trials per configuration used when the caller passes 0.
std::size_t default_trials(const std::string& name);

/// Runs a property suite. `trials` counts samples per configuration (a
/// suite sweeping several (n, d) pairs runs `trials` samples for each);
/// 0 selects default_trials. Trial i is seeded with splitmix64(seed ^ i) and
/// trials run concurrently, capped by CATKIT_THREADS when set. Throws
/// DomainError for an unknown name.
SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

}  // namespace catkit
