#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "isoforge/error.hpp"
#include "isoforge/structure.hpp"

namespace isoforge {

namespace {

// One refinement signature: current color plus, per relation, the sorted
// colors of out- and in-neighbors. Label-independent by construction.
using Signature = std::vector<long long>;

std::map<Label, int> stableColoring(const Structure& s) {
  std::vector<Label> verts(s.domain.begin(), s.domain.end());
  std::map<Label, int> color;
  for (Label v : verts) color[v] = 0;
  int classes = verts.empty() ? 0 : 1;

  for (std::size_t round = 0; round <= verts.size() + 1; ++round) {
    std::map<Label, Signature> sig;
    for (Label v : verts) {
      Signature g{color[v]};
      for (const auto& [name, pairs] : s.relations) {
        std::vector<long long> outs, ins;
        for (const auto& [a, b] : pairs) {
          if (a == v) outs.push_back(color[b]);
          if (b == v) ins.push_back(color[a]);
        }
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        g.push_back(-1);
        g.insert(g.end(), outs.begin(), outs.end());
        g.push_back(-2);
        g.insert(g.end(), ins.begin(), ins.end());
      }
      sig[v] = std::move(g);
    }
    std::vector<Signature> distinct;
    for (const auto& [v, g] : sig) distinct.push_back(g);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::map<Label, int> next;
    for (Label v : verts)
      next[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
          distinct.begin());
    const int nextClasses = static_cast<int>(distinct.size());
    if (nextClasses == classes) return next;
    color = std::move(next);
    classes = nextClasses;
  }
  return color;
}

Structure relabel(const Structure& s, const std::map<Label, Label>& to) {
  Structure out;
  out.kindHint = s.kindHint;
  for (Label v : s.domain) out.domain.insert(to.at(v));
  for (const auto& [name, pairs] : s.relations) {
    PairSet mapped;
    for (const auto& [a, b] : pairs) mapped.insert({to.at(a), to.at(b)});
    out.relations[name] = std::move(mapped);
  }
  return out;
}

}  // namespace

Structure canonicalForm(const Structure& s) {
  assertWellFormed(s, "canonicalForm");
  const std::map<Label, int> color = stableColoring(s);

  // Vertices grouped by color class; classes keep their refinement rank,
  // which is label-independent, so positions are forced up to within-class
  // permutation.
  std::map<int, std::vector<Label>> classes;
  for (const auto& [v, c] : color) classes[c].push_back(v);
  std::vector<std::vector<Label>> groups;
  for (auto& [c, vs] : classes) {
    std::sort(vs.begin(), vs.end());
    groups.push_back(vs);
  }

  std::optional<Structure> best;
  std::vector<std::vector<Label>> perms = groups;
  // Enumerate the product of within-class permutations.
  bool more = true;
  while (more) {
    std::map<Label, Label> to;
    Label next = 0;
    for (const auto& g : perms)
      for (Label v : g) to[v] = next++;
    Structure candidate = relabel(s, to);
    if (!best || candidate < *best) best = std::move(candidate);

    more = false;
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (std::next_permutation(perms[i].begin(), perms[i].end())) {
        more = true;
        break;
      }
  }
  if (!best) {
    Structure empty;
    empty.kindHint = s.kindHint;
    return empty;
  }
  return *best;
}

}  // namespace isoforge
