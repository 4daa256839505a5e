#include "isoforge/structure.hpp"

#include <algorithm>
#include <sstream>

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

const PairSet kEmptyPairs{};

std::string pairText(const LabelPair& p) {
  std::ostringstream os;
  os << "(" << p.first << "," << p.second << ")";
  return os.str();
}

void checkSymmetricIrreflexive(const Structure& s, const std::string& name,
                               std::vector<std::string>& out) {
  for (const auto& p : s.rel(name)) {
    if (p.first == p.second)
      out.push_back(name + " reflexive pair: " + pairText(p));
    else if (!s.related(name, p.second, p.first))
      out.push_back(name + " not symmetric: " + pairText(p) + " without (" +
                    std::to_string(p.second) + "," + std::to_string(p.first) + ")");
  }
}

void checkTransitive(const Structure& s, const std::string& name,
                     std::vector<std::string>& out) {
  const PairSet& r = s.rel(name);
  for (const auto& [a, b] : r)
    for (const auto& [b2, c] : r) {
      if (b2 != b) continue;
      if (!s.related(name, a, c)) {
        out.push_back(name + " not transitive: (" + std::to_string(a) + "," +
                      std::to_string(b) + "),(" + std::to_string(b) + "," +
                      std::to_string(c) + ") without (" + std::to_string(a) +
                      "," + std::to_string(c) + ")");
        return;
      }
    }
}

void requireRelation(const Structure& s, const std::string& name,
                     std::vector<std::string>& out) {
  if (!s.hasRelation(name)) out.push_back("missing relation: " + name);
}

// DFS over the undirected edge relation; reports one cycle as a label path
// and any vertex unreachable from the least label.
void checkConnectedAcyclic(const Structure& s, std::vector<std::string>& out) {
  if (s.domain.empty()) return;
  std::map<Label, std::vector<Label>> adj;
  for (Label v : s.domain) adj[v];
  for (const auto& [a, b] : s.rel("edge"))
    if (a != b) adj[a].push_back(b);
  for (auto& [v, ns] : adj) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  }

  std::map<Label, Label> parent;
  std::vector<Label> stack{*s.domain.begin()};
  std::set<Label> seen{*s.domain.begin()};
  parent[*s.domain.begin()] = *s.domain.begin();
  bool cycleReported = false;
  // Iterative DFS, least-label first, so the K3 cycle reads 0-1-2-0.
  std::vector<std::pair<Label, std::size_t>> frames{{*s.domain.begin(), 0}};
  while (!frames.empty()) {
    auto& [v, idx] = frames.back();
    if (idx >= adj[v].size()) {
      frames.pop_back();
      continue;
    }
    Label w = adj[v][idx++];
    if (!seen.count(w)) {
      seen.insert(w);
      parent[w] = v;
      frames.emplace_back(w, 0);
    } else if (w != parent[v] && !cycleReported) {
      std::vector<Label> path;
      for (Label u = v; u != w; u = parent[u]) path.push_back(u);
      path.push_back(w);
      std::reverse(path.begin(), path.end());
      path.push_back(w);
      std::ostringstream os;
      os << "cycle: ";
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) os << "-";
        os << path[i];
      }
      out.push_back(os.str());
      cycleReported = true;
    }
  }
  for (Label v : s.domain)
    if (!seen.count(v)) {
      out.push_back("not connected: " + std::to_string(v) +
                    " unreachable from " + std::to_string(*s.domain.begin()));
      break;
    }
}

// Strict partial order whose predecessor sets are chains, with a unique
// minimal element when the domain is nonempty.
void checkSetTree(const Structure& s, std::vector<std::string>& out) {
  const std::string name = "tree";
  const PairSet& r = s.rel(name);
  for (const auto& p : r)
    if (p.first == p.second) {
      out.push_back(name + " reflexive pair: " + pairText(p));
      return;
    }
  checkTransitive(s, name, out);
  if (!out.empty()) return;

  std::map<Label, std::vector<Label>> preds;
  for (Label v : s.domain) preds[v];
  for (const auto& [a, b] : r) preds[b].push_back(a);
  for (const auto& [v, ps] : preds)
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        Label p = ps[i], q = ps[j];
        if (!s.related(name, p, q) && !s.related(name, q, p)) {
          out.push_back("predecessors of " + std::to_string(v) +
                        " not a chain: " + std::to_string(p) + "," +
                        std::to_string(q));
          return;
        }
      }

  std::vector<Label> minimal;
  for (const auto& [v, ps] : preds)
    if (ps.empty()) minimal.push_back(v);
  if (!s.domain.empty() && minimal.size() != 1) {
    std::ostringstream os;
    os << "minimal elements != 1:";
    for (Label v : minimal) os << " " << v;
    out.push_back(os.str());
  }
}

}  // namespace

std::string className(StructureClass c) {
  switch (c) {
    case StructureClass::Graph: return "graph";
    case StructureClass::OrderedGraph: return "ordered-graph";
    case StructureClass::CombinatorialTree: return "combinatorial-tree";
    case StructureClass::OrderedCombinatorialTree: return "ordered-combinatorial-tree";
    case StructureClass::SetTree: return "set-tree";
    case StructureClass::OrderedSetTree: return "ordered-set-tree";
  }
  throw ContractError("className: bad enum");
}

std::optional<StructureClass> classFromName(const std::string& name) {
  for (StructureClass c :
       {StructureClass::Graph, StructureClass::OrderedGraph,
        StructureClass::CombinatorialTree, StructureClass::OrderedCombinatorialTree,
        StructureClass::SetTree, StructureClass::OrderedSetTree})
    if (className(c) == name) return c;
  return std::nullopt;
}

const PairSet& Structure::rel(const std::string& name) const {
  auto it = relations.find(name);
  return it == relations.end() ? kEmptyPairs : it->second;
}

bool Structure::hasRelation(const std::string& name) const {
  return relations.count(name) != 0;
}

bool Structure::related(const std::string& name, Label a, Label b) const {
  return rel(name).count({a, b}) != 0;
}

void assertWellFormed(const Structure& s, const std::string& who) {
  for (const auto& [name, pairs] : s.relations)
    for (const auto& [a, b] : pairs)
      if (!s.domain.count(a) || !s.domain.count(b))
        throw ContractError(who + ": label " +
                            std::to_string(s.domain.count(a) ? b : a) +
                            " out of domain in relation " + name);
}

std::vector<std::string> validate(const Structure& s, StructureClass c) {
  assertWellFormed(s, "validate");
  std::vector<std::string> out;
  switch (c) {
    case StructureClass::Graph:
      requireRelation(s, "edge", out);
      checkSymmetricIrreflexive(s, "edge", out);
      break;
    case StructureClass::OrderedGraph:
      requireRelation(s, "edge", out);
      requireRelation(s, "order", out);
      checkSymmetricIrreflexive(s, "edge", out);
      checkTransitive(s, "order", out);
      break;
    case StructureClass::CombinatorialTree:
      requireRelation(s, "edge", out);
      checkSymmetricIrreflexive(s, "edge", out);
      if (out.empty()) checkConnectedAcyclic(s, out);
      break;
    case StructureClass::OrderedCombinatorialTree:
      requireRelation(s, "edge", out);
      requireRelation(s, "order", out);
      checkSymmetricIrreflexive(s, "edge", out);
      if (out.empty()) checkConnectedAcyclic(s, out);
      checkTransitive(s, "order", out);
      break;
    case StructureClass::SetTree:
      requireRelation(s, "tree", out);
      if (out.empty()) checkSetTree(s, out);
      break;
    case StructureClass::OrderedSetTree:
      requireRelation(s, "tree", out);
      requireRelation(s, "order", out);
      if (out.empty()) checkSetTree(s, out);
      checkTransitive(s, "order", out);
      break;
  }
  return out;
}

}  // namespace isoforge
