#include "isoforge/sums.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

bool isPermutation(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int v : perm) {
    if (v < 0 || v >= static_cast<int>(perm.size())) return false;
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

// The parity-monotone permutation whose evens land on the given sorted image
// set; the odds take the complement in order.
ParityPerm fromEvensImage(const std::vector<int>& evens, int k) {
  std::vector<bool> taken(static_cast<std::size_t>(2 * k), false);
  for (int v : evens) taken[static_cast<std::size_t>(v)] = true;
  ParityPerm g;
  g.images.resize(static_cast<std::size_t>(2 * k));
  for (int n = 0; n < k; ++n) g.images[static_cast<std::size_t>(2 * n)] = evens[static_cast<std::size_t>(n)];
  int slot = 0;
  for (int v = 0; v < 2 * k; ++v)
    if (!taken[static_cast<std::size_t>(v)])
      g.images[static_cast<std::size_t>(2 * slot++ + 1)] = v;
  return g;
}

Label doubled(Label v) { return 2 * v; }
Label doubledPlusOne(Label v) { return 2 * v + 1; }

void copyInto(const Structure& part, Label (*shift)(Label), Structure& out) {
  for (Label v : part.domain) out.domain.insert(shift(v));
  for (const auto& [name, pairs] : part.relations) {
    PairSet& target = out.relations[name];
    for (const auto& [u, v] : pairs) target.insert({shift(u), shift(v)});
  }
}

Label rootOfStrictOrder(const Structure& x) {
  std::vector<Label> least;
  for (Label v : x.domain) {
    bool belowAll = true;
    for (Label u : x.domain)
      if (u != v && !x.related("order", v, u)) {
        belowAll = false;
        break;
      }
    if (belowAll) least.push_back(v);
  }
  if (least.empty()) throw ContractError("oplusRooted: root of x undefined");
  if (least.size() > 1) throw ContractError("oplusRooted: root of x not unique");
  return least.front();
}

Label rootOfReflexiveOrder(const Structure& z) {
  std::vector<Label> hits;
  for (Label v : z.domain) {
    if (!z.related("order", v, v)) continue;
    bool isolated = true;
    for (Label u : z.domain)
      if (u != v && (z.related("order", v, u) || z.related("order", u, v))) {
        isolated = false;
        break;
      }
    if (isolated) hits.push_back(v);
  }
  if (hits.empty()) throw ContractError("oplusRooted: root of z undefined");
  if (hits.size() > 1) throw ContractError("oplusRooted: root of z not unique");
  return hits.front();
}

}  // namespace

bool isParityMonotone(const std::vector<int>& perm) {
  if (perm.size() % 2 != 0 || !isPermutation(perm)) return false;
  for (std::size_t n = 0; n + 2 < perm.size(); ++n)
    if (perm[n] > perm[n + 2]) return false;
  return true;
}

std::vector<ParityPerm> enumerateG(int k) {
  if (k < 1) throw ContractError("enumerateG: k must be >= 1");
  std::vector<ParityPerm> out;
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(fromEvensImage(comb, k));
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

ParityDecomposition decomposeParity(const std::vector<int>& h) {
  if (h.size() % 2 != 0 || !isPermutation(h))
    throw ContractError("decomposeParity: input is not a permutation of an even range");
  const int k = static_cast<int>(h.size()) / 2;

  std::vector<int> evens, odds;
  for (int n = 0; n < k; ++n) {
    evens.push_back(h[static_cast<std::size_t>(2 * n)]);
    odds.push_back(h[static_cast<std::size_t>(2 * n + 1)]);
  }
  std::vector<int> evensSorted = evens, oddsSorted = odds;
  std::sort(evensSorted.begin(), evensSorted.end());
  std::sort(oddsSorted.begin(), oddsSorted.end());

  ParityDecomposition out;
  out.g = fromEvensImage(evensSorted, k);
  for (int n = 0; n < k; ++n) {
    const auto ep = std::lower_bound(evensSorted.begin(), evensSorted.end(),
                                     evens[static_cast<std::size_t>(n)]);
    out.p.push_back(static_cast<int>(ep - evensSorted.begin()));
    const auto op = std::lower_bound(oddsSorted.begin(), oddsSorted.end(),
                                     odds[static_cast<std::size_t>(n)]);
    out.q.push_back(static_cast<int>(op - oddsSorted.begin()));
  }
  return out;
}

Structure oplus(const Structure& x, const Structure& z) {
  Structure out;
  copyInto(x, doubled, out);
  copyInto(z, doubledPlusOne, out);
  if (x.kindHint == z.kindHint) out.kindHint = x.kindHint;
  return out;
}

Structure oplusRooted(const Structure& x, const Structure& z) {
  const Label rx = rootOfStrictOrder(x);
  const Label rz = rootOfReflexiveOrder(z);
  Structure out = oplus(x, z);
  out.relations["edge"].insert({2 * rx, 2 * rz + 1});
  out.relations["edge"].insert({2 * rz + 1, 2 * rx});
  return out;
}

Structure logicAction(const std::vector<int>& g, const Structure& a) {
  auto act = [&g](Label v) {
    return v >= 0 && static_cast<std::size_t>(v) < g.size()
               ? g[static_cast<std::size_t>(v)]
               : v;
  };
  Structure out;
  out.kindHint = a.kindHint;
  std::map<Label, Label> sent;
  for (Label v : a.domain) {
    const Label w = act(v);
    if (!out.domain.insert(w).second)
      throw ContractError("logicAction: map not injective on the domain, " +
                          std::to_string(sent.at(w)) + " and " +
                          std::to_string(v) + " collide at " + std::to_string(w));
    sent[w] = v;
  }
  for (const auto& [name, pairs] : a.relations) {
    PairSet& target = out.relations[name];
    for (const auto& [u, v] : pairs) target.insert({act(u), act(v)});
  }
  return out;
}

MorphismWitness glueEmbeddings(const Structure& x1, const Structure& x2,
                               const MorphismWitness& e1, const Structure& z1,
                               const Structure& z2, const MorphismWitness& e2) {
  for (const MorphismWitness* e : {&e1, &e2})
    if (e->kind != MorphKind::Embedding && e->kind != MorphKind::Isomorphism)
      throw ContractError("glueEmbeddings: witnesses must be embeddings or isomorphisms");
  if (!verify(x1, x2, e1))
    throw ContractError("glueEmbeddings: first witness does not verify");
  if (!verify(z1, z2, e2))
    throw ContractError("glueEmbeddings: second witness does not verify");

  MorphismWitness out;
  out.kind = e1.kind == MorphKind::Isomorphism && e2.kind == MorphKind::Isomorphism
                 ? MorphKind::Isomorphism
                 : MorphKind::Embedding;
  for (const auto& [a, b] : e1.map) out.map[2 * a] = 2 * b;
  for (const auto& [a, b] : e2.map) out.map[2 * a + 1] = 2 * b + 1;
  return out;
}

std::pair<Structure, Structure> splitParts(const Structure& a) {
  std::pair<Structure, Structure> out;
  for (Label v : a.domain)
    (a.related("order", v, v) ? out.second : out.first).domain.insert(v);
  for (const auto& [name, pairs] : a.relations) {
    for (Structure* part : {&out.first, &out.second}) {
      PairSet& target = part->relations[name];
      for (const auto& [u, v] : pairs)
        if (part->domain.count(u) && part->domain.count(v)) target.insert({u, v});
    }
  }
  out.first.kindHint = a.kindHint;
  out.second.kindHint = a.kindHint;
  return out;
}

}  // namespace isoforge
