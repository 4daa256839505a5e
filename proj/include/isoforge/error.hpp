#pragma once

#include <stdexcept>
#include <string>

namespace isoforge {

// Violated precondition or broken internal invariant. Callers that surface
// these to users (CLI, suite) catch them; library code never swallows them.
struct ContractError : std::logic_error {
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

// Malformed input document; message carries the byte position when known.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace isoforge
