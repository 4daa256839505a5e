#include "isoforge/corpus.hpp"

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

std::vector<Structure> allGraphsOn(const std::set<Label>& domain) {
  std::vector<LabelPair> slots;
  for (Label a : domain)
    for (Label b : domain)
      if (a < b) slots.push_back({a, b});
  std::vector<Structure> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<LabelPair> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask & (std::size_t{1} << i)) edges.push_back(slots[i]);
    out.push_back(makeGraph(domain, edges));
  }
  return out;
}

}  // namespace

Structure makeGraph(const std::set<Label>& domain,
                    const std::vector<LabelPair>& undirectedEdges) {
  Structure s;
  s.domain = domain;
  s.relations["edge"] = {};
  for (const auto& [a, b] : undirectedEdges) {
    if (a == b) throw ContractError("makeGraph: loop at " + std::to_string(a));
    s.relations["edge"].insert({a, b});
    s.relations["edge"].insert({b, a});
  }
  assertWellFormed(s, "makeGraph");
  s.kindHint = StructureClass::Graph;
  return s;
}

Structure makeOrderedGraph(const std::set<Label>& domain,
                           const std::vector<LabelPair>& undirectedEdges,
                           const std::vector<LabelPair>& orderPairs) {
  Structure s = makeGraph(domain, undirectedEdges);
  s.relations["order"] = {};
  for (const auto& p : orderPairs) s.relations["order"].insert(p);
  assertWellFormed(s, "makeOrderedGraph");
  s.kindHint = StructureClass::OrderedGraph;
  return s;
}

Structure pathGraph(int n) {
  std::set<Label> domain;
  std::vector<LabelPair> edges;
  for (int i = 0; i < n; ++i) {
    domain.insert(i);
    if (i) edges.push_back({i - 1, i});
  }
  return makeGraph(domain, edges);
}

Structure cycleGraph(int n) {
  if (n < 3) throw ContractError("cycleGraph: need n >= 3");
  Structure s = pathGraph(n);
  s.relations["edge"].insert({0, n - 1});
  s.relations["edge"].insert({n - 1, 0});
  return s;
}

Structure completeGraph(int n) {
  std::set<Label> domain;
  std::vector<LabelPair> edges;
  for (int i = 0; i < n; ++i) {
    domain.insert(i);
    for (int j = 0; j < i; ++j) edges.push_back({j, i});
  }
  return makeGraph(domain, edges);
}

Structure edgelessGraph(int n) {
  std::set<Label> domain;
  for (int i = 0; i < n; ++i) domain.insert(i);
  return makeGraph(domain, {});
}

Structure padToDomain(const Structure& x, const std::set<Label>& domain) {
  for (Label v : x.domain)
    if (!domain.count(v))
      throw ContractError("padToDomain: target misses label " +
                          std::to_string(v));
  Structure out = x;
  out.domain = domain;
  return out;
}

std::vector<Structure> smallGraphCorpus() {
  std::vector<Structure> out;
  for (const auto& domain :
       {std::set<Label>{0}, std::set<Label>{0, 1}, std::set<Label>{0, 1, 2}})
    for (auto& g : allGraphsOn(domain)) out.push_back(std::move(g));
  return out;
}

std::vector<Structure> fourVertexGraphCorpus() {
  return allGraphsOn({0, 1, 2, 3});
}

}  // namespace isoforge
