#include "isoforge/coding.hpp"

#include <cmath>

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

Nat cantorPair(Nat n, Nat m) {
  const Nat d = n + m;
  return d * (d + 1) / 2 + m;
}

std::pair<Nat, Nat> cantorUnpair(Nat k) {
  // w = largest diagonal with w(w+1)/2 <= k; float sqrt then exact fixup.
  Nat w = static_cast<Nat>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > k) --w;
  while ((w + 1) * (w + 2) / 2 <= k) ++w;
  const Nat m = k - w * (w + 1) / 2;
  return {w - m, m};
}

Nat swappedPair(Nat n, Nat m) { return cantorPair(m, n); }

std::pair<Nat, Nat> swappedUnpair(Nat k) {
  auto [n, m] = cantorUnpair(k);
  return {m, n};
}

const Pairing*& activeSlot() {
  static const Pairing* active = &Pairing::cantor();
  return active;
}

}  // namespace

const Pairing& Pairing::cantor() {
  static const Pairing p{"cantor", &cantorPair, &cantorUnpair};
  return p;
}

const Pairing& Pairing::cantorSwapped() {
  static const Pairing p{"cantor-swapped", &swappedPair, &swappedUnpair};
  return p;
}

const Pairing& activePairing() { return *activeSlot(); }

void setActivePairing(const Pairing& p) { activeSlot() = &p; }

PairingGuard::PairingGuard(const Pairing& p) : saved_(&activePairing()) {
  setActivePairing(p);
}

PairingGuard::~PairingGuard() { setActivePairing(*saved_); }

Nat pairIndex(Nat n, Nat m) { return activePairing().pair(n, m); }

std::pair<Nat, Nat> unpairIndex(Nat k) { return activePairing().unpair(k); }

Seq evenSubsequence(const Seq& s) {
  Seq out;
  out.reserve((s.size() + 1) / 2);
  for (std::size_t i = 0; i < s.size(); i += 2) out.push_back(s[i]);
  return out;
}

std::pair<Nat, Nat> relevantPair(const Seq& s) {
  if (s.empty()) throw ContractError("relevantPair: empty sequence");
  const auto [n, m] = unpairIndex(static_cast<Nat>(s.size()) - 1);
  return {s[static_cast<std::size_t>(n)], s[static_cast<std::size_t>(m)]};
}

}  // namespace isoforge
