#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chanorder {

// Outcome of a seeded property suite: the run count and every failure,
// described well enough to reproduce. Empty failures means the suite passed.
struct SuiteReport {
  std::size_t total = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

}  // namespace chanorder
