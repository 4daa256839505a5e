#pragma once

#include <map>
#include <string>

#include "isoforge/coding.hpp"
#include "isoforge/morphism.hpp"
#include "isoforge/structure.hpp"

namespace isoforge {

// Node of a truncated coding tree: a sequence, or a tagged terminal child
// of one. Terminal slot 1 occurs only in R-codes, on sequences containing
// the wildcard letter 0.
struct TreeNode {
  enum class Kind { Sequence, Terminal };
  Kind kind = Kind::Sequence;
  Seq seq;       // the sequence itself, or the terminal's parent sequence
  int slot = 0;  // terminals only: 0 or 1

  static TreeNode sequence(Seq s);
  static TreeNode terminal(Seq parent, int slot);

  bool operator==(const TreeNode& o) const {
    return kind == o.kind && seq == o.seq && slot == o.slot;
  }
  // Sequences before terminals, each by (length, lex, slot); label numbering
  // follows this order.
  bool operator<(const TreeNode& o) const;
};

struct TruncSpec {
  int maxLen = 1;    // maximum sequence length, >= 1
  int alphabet = 1;  // entries range over 0..alphabet-1, >= 1

  bool operator==(const TruncSpec& o) const {
    return maxLen == o.maxLen && alphabet == o.alphabet;
  }
};

enum class CodeKind { T, R };

// A truncated coding tree as an ordered set-theoretic tree: `tree` is the
// strict extension order (terminals sit strictly above their parent and all
// of its prefixes), `order` is the equivalence E: u E v iff both are
// terminals, or u = v = the empty sequence, or both are nonempty sequences
// with equal relevantPair(evenSubsequence(.)). Labels 0..n-1 enumerate the
// sorted TreeNodes.
struct TreeCode {
  CodeKind kind = CodeKind::T;
  TruncSpec spec;
  Structure structure;
  std::map<Label, TreeNode> provenance;
  std::map<TreeNode, Label> labels;  // inverse of provenance, cached

  Label labelOf(const TreeNode& node) const;  // ContractError when absent
  bool hasNode(const TreeNode& node) const;
};

// x must be a valid graph on {0..n-1} with n <= spec.alphabet. Terminal at
// s iff |s| is even, or |s| is odd and relevantPair(evenSubsequence(s)) is
// an edge of x.
TreeCode buildT(const Structure& x, TruncSpec spec);

// x must be a valid graph on {0..n-1} with n+1 <= spec.alphabet; letter
// v+1 codes vertex v, letter 0 is the wildcard. Two terminals on every
// nonempty sequence containing 0; a single terminal on an all-positive s
// iff the letter-decoded relevantPair(s) is an edge of x.
TreeCode buildR(const Structure& x, TruncSpec spec);

// Lift of a graph isomorphism sigma: x -> y to the codes at the shared
// spec: entrywise action on sequences (R-kind via the wildcard-preserving
// shift), slot-preserving on terminals.
MorphismWitness liftIso(CodeKind kind, const Structure& x, const Structure& y,
                        const MorphismWitness& sigma, TruncSpec spec);

// Deterministic universal embedding: image of each sequence is an
// even-length extension of its parent's image carrying the same
// relevantPair of its evenSubsequence, first added coordinate = the child's
// last letter, minimal feasible length, zeros elsewhere. Lands inside the
// even fragment, which every T-code at targetSpec contains.
struct UniversalEmbedding {
  std::map<TreeNode, TreeNode> nodeMap;
  TruncSpec targetSpec;
};
UniversalEmbedding universalImageMap(const TreeCode& source);

// Resolves the node-level universal map to labels of a concrete target
// code built at the reported targetSpec (any graph y works).
MorphismWitness bindUniversalEmbedding(const UniversalEmbedding& ue,
                                       const TreeCode& source,
                                       const TreeCode& target);

struct EmbedUniversalResult {
  MorphismWitness witness;  // buildT(x,spec) -> buildT(y,targetSpec)
  TruncSpec targetSpec;
  TreeCode source;
  TreeCode target;
};
EmbedUniversalResult embedUniversalT(const Structure& x, const Structure& y,
                                     TruncSpec spec);

// From a graph embedding f: x -> y, the letter collapse g (wildcard for
// letters outside the image of f) lifted entrywise to a weak epimorphism
// h: buildR(y, {spec.maxLen, |y|+1}) ->> buildR(x, spec). Requires
// spec.alphabet == |x|+1, otherwise h cannot be onto.
struct WeakEpiResult {
  MorphismWitness witness;
  TreeCode from;  // the y-side code
  TreeCode to;    // the x-side code
};
WeakEpiResult weakEpiR(const Structure& x, const Structure& y,
                       const MorphismWitness& f, TruncSpec spec);

// Reads the candidate vertex map off the depth-1 sequence nodes of a
// verified T-code isomorphism. The result is *not* checked as a graph
// isomorphism here; callers run the graph oracle.
MorphismWitness extractIsoT(const TreeCode& a, const TreeCode& b,
                            const MorphismWitness& tau);

// Serialization: the code's structure document plus a provenance
// side-table {"label": {"seq":[...]} | {"term":[...parent..., slot]}}.
std::string saveTreeCode(const TreeCode& code);
TreeCode loadTreeCode(const std::string& bytes);

}  // namespace isoforge
