#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace isoforge {

struct SuiteOptions {
  // Substring match against criterion names; empty runs everything.
  std::string filter;
  // Instance generator seed for the schroeder-bernstein criterion; the
  // exhaustive criteria ignore it.
  std::uint64_t seed = 1729;
  // Truncation depth for the T-coding transfer criterion (and its re-run
  // under the swapped pairing). The pinned default is 4; smaller values are
  // honest but check a shallower fragment.
  int maxLenT = 4;
};

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::size_t instances = 0;  // individual checks run; always > 0 when enabled
  std::size_t failureCount = 0;
  double seconds = 0.0;
  std::vector<std::string> failures;  // first few messages, verbatim
};

struct SuiteReport {
  std::vector<CriterionResult> rows;  // ordered by criterion name

  bool allPassed() const;
};

// Runs every criterion whose name contains opts.filter, in name order.
// Criteria are exact: any mismatch, contract violation, or blown runtime
// budget fails the row. When progress is given, one pass/fail line is
// streamed per criterion as it finishes.
SuiteReport runSuite(const SuiteOptions& opts = {},
                     std::ostream* progress = nullptr);

std::string reportText(const SuiteReport& report);
std::string reportJson(const SuiteReport& report);

}  // namespace isoforge
