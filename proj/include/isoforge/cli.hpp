#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isoforge {

// One command-line invocation; args excludes the program name. Returns the
// process exit code: 0 success, 1 negative outcome (no morphism found,
// failed criterion), 2 usage or input error. Deterministic for fixed args,
// seed, and IFORGE_BUDGET.
int runCli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace isoforge
