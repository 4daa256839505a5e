#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isoforge/structure.hpp"

namespace isoforge {

enum class MorphKind {
  Isomorphism,
  Embedding,
  Homomorphism,
  WeakHomomorphism,
  Epimorphism,
  WeakEpimorphism,
};

std::string kindName(MorphKind k);
std::optional<MorphKind> kindFromName(const std::string& name);

// Strong kinds preserve every relation pointwise in both directions
// ((p,q) related in a  iff  (f p, f q) related in b); weak kinds only
// forward. Embedding = injective strong; Epimorphism = surjective strong;
// WeakEpimorphism = surjective weak; Isomorphism = bijective strong.
bool kindStrong(MorphKind k);
bool kindInjective(MorphKind k);
bool kindSurjective(MorphKind k);

struct MorphismWitness {
  std::map<Label, Label> map;
  MorphKind kind = MorphKind::Homomorphism;

  bool operator==(const MorphismWitness& o) const {
    return map == o.map && kind == o.kind;
  }
};

// True iff w.map is a morphism of kind w.kind from a to b, over the union
// of both relation signatures (absent relation = empty). Non-total maps or
// images escaping domain(b) are contract errors, not "false".
bool verify(const Structure& a, const Structure& b, const MorphismWitness& w);

enum class SearchStatus { Found, None, BudgetExhausted };

struct SearchOptions {
  std::uint64_t budget = 0;  // node expansions; 0 = unlimited
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::None;
  std::optional<MorphismWitness> witness;
  std::uint64_t expansions = 0;
};

// Lexicographically least verifying witness (map read as a tuple over
// ascending domain(a) labels), or None; exhaustive, deterministic.
SearchOutcome search(const Structure& a, const Structure& b, MorphKind k,
                     const SearchOptions& opts = {});

// Every verifying witness of the kind, in the same lexicographic order.
// limit = 0 means all of them.
std::vector<MorphismWitness> searchAll(const Structure& a, const Structure& b,
                                       MorphKind k, std::size_t limit = 0);

// first: a -> b, second: b -> c; result kind = first.kind.
MorphismWitness compose(const MorphismWitness& first,
                        const MorphismWitness& second);

}  // namespace isoforge
