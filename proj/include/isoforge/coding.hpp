#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace isoforge {

using Nat = std::uint64_t;
using Seq = std::vector<Nat>;

// A bijection omega x omega -> omega with n, m <= pair(n, m).
// Swappable so nothing downstream can depend on the formula beyond that
// contract; the acceptance suite re-runs the tree checks under a second
// conforming bijection.
struct Pairing {
  std::string name;
  Nat (*pair)(Nat n, Nat m);
  std::pair<Nat, Nat> (*unpair)(Nat k);

  static const Pairing& cantor();         // (n+m)(n+m+1)/2 + m
  static const Pairing& cantorSwapped();  // arguments transposed
};

// Process-wide active pairing, defaults to cantor(). Swapping is a test
// seam, not a runtime feature; use PairingGuard for scoped swaps.
const Pairing& activePairing();
void setActivePairing(const Pairing& p);

struct PairingGuard {
  explicit PairingGuard(const Pairing& p);
  ~PairingGuard();
  PairingGuard(const PairingGuard&) = delete;
  PairingGuard& operator=(const PairingGuard&) = delete;

 private:
  const Pairing* saved_;
};

Nat pairIndex(Nat n, Nat m);
std::pair<Nat, Nat> unpairIndex(Nat k);

// <s(0), s(2), s(4), ...>; length = ceil(|s|/2).
Seq evenSubsequence(const Seq& s);

// (s(n), s(m)) where (n, m) = unpairIndex(|s|-1). Well-defined because
// n, m <= |s|-1. Empty input is a contract error.
std::pair<Nat, Nat> relevantPair(const Seq& s);

}  // namespace isoforge
