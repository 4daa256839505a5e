#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace isoforge {

using Label = int;
using LabelPair = std::pair<Label, Label>;
using PairSet = std::set<LabelPair>;

enum class StructureClass {
  Graph,
  OrderedGraph,
  CombinatorialTree,
  OrderedCombinatorialTree,
  SetTree,
  OrderedSetTree,
};

std::string className(StructureClass c);
std::optional<StructureClass> classFromName(const std::string& name);

// Finite relational structure: labeled finite domain plus named binary
// relations. Domains are arbitrary label sets, not initial segments — sums
// keep even/odd labels literal. kindHint is an in-memory convenience only:
// never serialized, never part of identity.
struct Structure {
  std::set<Label> domain;
  std::map<std::string, PairSet> relations;
  std::optional<StructureClass> kindHint;

  // Empty set when the relation is absent; absence and emptiness are
  // indistinguishable to queries, distinguishable to validators.
  const PairSet& rel(const std::string& name) const;
  bool hasRelation(const std::string& name) const;
  bool related(const std::string& name, Label a, Label b) const;

  bool operator==(const Structure& o) const {
    return domain == o.domain && relations == o.relations;
  }
  bool operator!=(const Structure& o) const { return !(*this == o); }
  bool operator<(const Structure& o) const {
    if (domain != o.domain) return domain < o.domain;
    return relations < o.relations;
  }
};

// Throws ContractError when some relation pair leaves the domain.
void assertWellFormed(const Structure& s, const std::string& who);

// Empty result = valid. Diagnostics name the violated axiom and a witness.
std::vector<std::string> validate(const Structure& s, StructureClass c);

// Relabels onto {0..n-1}; equal results iff isomorphic; deterministic and
// idempotent. Cost grows with the product of automorphism-class factorials —
// intended for small structures (corpus scale), not for tree codes.
Structure canonicalForm(const Structure& s);

// Canonical text document: {"domain": [...], "relations": {name: [[a,b]...]}}
// with sorted labels, lexicographically sorted pairs, sorted names.
// save(load(doc)) is byte-identical on canonical documents.
Structure loadStructure(const std::string& bytes);
std::string saveStructure(const Structure& s);

// edge: undirected lines; order: dashed arrows; tree: solid arrows.
std::string exportDot(const Structure& s);

}  // namespace isoforge
