#pragma once

#include <vector>

#include "isoforge/structure.hpp"

namespace isoforge {

// Graphs carry an explicit (possibly empty) edge relation; undirected edges
// are stored as both ordered pairs.
Structure makeGraph(const std::set<Label>& domain,
                    const std::vector<LabelPair>& undirectedEdges);
Structure makeOrderedGraph(const std::set<Label>& domain,
                           const std::vector<LabelPair>& undirectedEdges,
                           const std::vector<LabelPair>& orderPairs);

Structure pathGraph(int n);       // 0-1-...-(n-1)
Structure cycleGraph(int n);      // n >= 3
Structure completeGraph(int n);
Structure edgelessGraph(int n);

// x widened by isolated vertices up to the given domain, which must contain
// domain(x).
Structure padToDomain(const Structure& x, const std::set<Label>& domain);

// Every labeled graph on {0}, then {0,1}, then {0,1,2}: 11 structures, edge
// sets enumerated as ascending bitmasks over lex-sorted vertex pairs.
std::vector<Structure> smallGraphCorpus();

// Every labeled graph on {0,1,2,3}: 64 structures, same enumeration order.
std::vector<Structure> fourVertexGraphCorpus();

}  // namespace isoforge
