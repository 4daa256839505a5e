#pragma once

#include <functional>
#include <vector>

#include "isoforge/structure.hpp"
#include "isoforge/sums.hpp"

namespace isoforge {

// One point of an assembled witness space: an irreflexive-ordered part, a
// reflexive-ordered part tied to it by the kit classifier, and a
// parity-monotone permutation.
struct WEntry {
  Structure x;
  Structure z;
  ParityPerm g;

  bool operator==(const WEntry& o) const {
    return x == o.x && z == o.z && g == o.g;
  }
  bool operator<(const WEntry& o) const {
    if (x != o.x) return x < o.x;
    if (z != o.z) return z < o.z;
    return g < o.g;
  }
};

// Finite families standing in for the two structure classes, plus the
// classifier tying a reflexive-ordered member to an index into familyPrime.
// section, when present, picks a familySecond member back out of a class
// index; classify must be constant on isomorphism classes of familySecond.
struct WitnessKit {
  std::vector<Structure> familyPrime;   // irreflexive orders
  std::vector<Structure> familySecond;  // reflexive orders
  std::function<std::size_t(const Structure&)> classify;
  std::function<Structure(std::size_t)> section;  // optional
};

// Throws ContractError when the kit breaks one of its published invariants:
// family members must be valid ordered graphs with the required order
// reflexivity, classify must stay in range and be isomorphism-invariant,
// and section (if set) must select a member of the class it is given.
void validateKit(const WitnessKit& kit);

struct WSpace {
  std::vector<WEntry> entries;
  std::vector<std::vector<bool>> S;  // S[i][j]: x_i embeds into x_j
  std::vector<std::vector<bool>> F;  // F[i][j]: z_i isomorphic to z_j
  std::vector<Structure> images;     // logicAction(g, oplus(x, z)) per entry
};

// Every (x, z, g) with x a familyPrime member isomorphic to the classifier's
// target for z and g parity-monotone of size k; entries value-deduplicated
// and sorted.
WSpace assembleW(const WitnessKit& kit, int k);

// Named class with its paired irreflexive target, for the n-classes variant.
struct ClassRep {
  Structure x;
  Structure z;
};

// Variant with finitely many named classes: z isomorphic to reps[i].z for
// some i < n-1 pairs with reps[i].x; every residual z pairs with the last
// rep's x. Representatives' z-parts must be pairwise non-isomorphic.
WSpace assembleW(const WitnessKit& kit, int k, const std::vector<ClassRep>& reps);

}  // namespace isoforge
