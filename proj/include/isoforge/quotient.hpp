#pragma once

#include <map>
#include <set>
#include <vector>

#include "isoforge/structure.hpp"

namespace isoforge {

// Finite equivalence relation presented as its partition into blocks.
struct FinPartition {
  std::set<Label> ground;
  std::vector<std::set<Label>> blocks;  // nonempty, disjoint, cover ground

  bool operator==(const FinPartition& o) const {
    return ground == o.ground && blocks == o.blocks;
  }
  bool operator!=(const FinPartition& o) const { return !(*this == o); }
};

// ContractError when the blocks are not a partition of the ground set.
void assertPartition(const FinPartition& p);

using ReductionMap = std::map<Label, Label>;

// True iff elements of the same e-block map to the same g-block and
// elements of different e-blocks map to different g-blocks. A map that is
// not total on e's ground or escapes g's ground is a contract error.
bool checkReduction(const ReductionMap& f, const FinPartition& e,
                    const FinPartition& g);

// True iff phi and psi are reductions (e to g, g to e) whose factorings to
// the block sets are mutually inverse bijections.
bool checkClasswiseIso(const ReductionMap& phi, const ReductionMap& psi,
                       const FinPartition& e, const FinPartition& g);

struct SBResult {
  std::vector<std::size_t> blockMap;  // e-block index -> g-block index
  ReductionMap phiPrime;              // lifting of blockMap, min elements
  ReductionMap psiPrime;              // lifting of its inverse
};

// Schroeder-Bernstein on the quotients: given reductions in both directions
// with injective factorings, produce a block bijection by chain
// decomposition (blocks on a chain from a non-image g-block origin follow
// psi backwards, all others follow phi) together with element liftings.
// The liftings always satisfy checkClasswiseIso.
SBResult sbBijection(const FinPartition& e, const FinPartition& g,
                     const ReductionMap& phi, const ReductionMap& psi);

// Tagged disjoint union: left labels doubled, right labels doubled plus
// one; blocks of the left side first. Output blocks sorted by minimum.
FinPartition disjointUnion(const FinPartition& e, const FinPartition& g);

// Union of all blocks meeting a; a must be inside the ground set.
std::set<Label> saturate(const std::set<Label>& a, const FinPartition& e);

// Coarsen e by merging everything outside the saturated set xF into one
// block; blocks inside xF survive unchanged. Output blocks sorted by
// minimum. xF not saturated is a contract error.
FinPartition essentiallyRefine(const FinPartition& e, const std::set<Label>& xF);

}  // namespace isoforge
