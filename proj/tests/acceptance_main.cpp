#include <cstring>
#include <iostream>
#include <string>

#include "isoforge/acceptance.hpp"

// Streams one pass/fail line per criterion; exit 0 only when every enabled
// criterion passes. Optional arguments mirror the CLI's suite verb so a
// single criterion can be rerun by hand while debugging.
int main(int argc, char** argv) {
  isoforge::SuiteOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--filter" && i + 1 < argc) {
      opts.filter = argv[++i];
    } else if (arg == "--seed" && i + 1 < argc) {
      opts.seed = std::stoull(argv[++i]);
    } else if (arg == "--maxlen" && i + 1 < argc) {
      opts.maxLenT = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--filter NAME] [--seed N] [--maxlen D]\n";
      return 2;
    }
  }

  const isoforge::SuiteReport report = isoforge::runSuite(opts, &std::cout);
  if (report.rows.empty()) {
    std::cerr << "filter matched no criteria\n";
    return 2;
  }
  std::size_t passed = 0;
  for (const auto& row : report.rows)
    if (row.passed) ++passed;
  std::cout << passed << "/" << report.rows.size() << " criteria passed\n";
  return report.allPassed() ? 0 : 1;
}
