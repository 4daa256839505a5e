#pragma once

#include <utility>
#include <vector>

#include "isoforge/morphism.hpp"
#include "isoforge/structure.hpp"

namespace isoforge {

// Permutation of {0..2k-1} that is increasing on each parity class. Such a
// permutation is determined by the image set of the evens.
struct ParityPerm {
  std::vector<int> images;  // images[n] = value at n; size 2k

  int k() const { return static_cast<int>(images.size()) / 2; }
  int operator()(int n) const { return images.at(static_cast<std::size_t>(n)); }

  bool operator==(const ParityPerm& o) const { return images == o.images; }
  bool operator!=(const ParityPerm& o) const { return !(*this == o); }
  bool operator<(const ParityPerm& o) const { return images < o.images; }
};

// True iff perm is a permutation of {0..size-1}, size is even, and
// same-parity positions keep their relative order.
bool isParityMonotone(const std::vector<int>& perm);

// All parity-monotone permutations of {0..2k-1}, ordered by the image set of
// the evens (lexicographically as sorted tuples). Size C(2k, k).
std::vector<ParityPerm> enumerateG(int k);

struct ParityDecomposition {
  ParityPerm g;
  std::vector<int> p;  // h(2n) = g(2 p(n))
  std::vector<int> q;  // h(2n+1) = g(2 q(n) + 1)
};

// Factor an arbitrary permutation of {0..2k-1} through the unique
// parity-monotone permutation with the same evens image.
ParityDecomposition decomposeParity(const std::vector<int>& h);

// Copy x on the even labels and z on the odd labels; relations are the
// name-wise unions of the two halves, with no cross pairs.
Structure oplus(const Structure& x, const Structure& z);

// oplus plus one undirected edge joining the root of x (least vertex in x's
// order) to the root of z (the unique vertex in order relation with itself
// and nothing else).
Structure oplusRooted(const Structure& x, const Structure& z);

// Relabel a through g; labels beyond the length of g move identically.
Structure logicAction(const std::vector<int>& g, const Structure& a);

// Combine a witness x1 -> x2 with a witness z1 -> z2 into one on the sums,
// evens through e1 and odds through e2. Both inputs must verify as
// Embedding or Isomorphism; the result is an Isomorphism iff both are.
MorphismWitness glueEmbeddings(const Structure& x1, const Structure& x2,
                               const MorphismWitness& e1, const Structure& z1,
                               const Structure& z2, const MorphismWitness& e2);

// Partition a domain by self-relatedness under "order" and return the two
// induced substructures (original labels): vertices not related to
// themselves first, the self-related ones second.
std::pair<Structure, Structure> splitParts(const Structure& a);

}  // namespace isoforge
