#include "isoforge/morphism.hpp"

#include <algorithm>

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

std::vector<std::string> signatureUnion(const Structure& a, const Structure& b) {
  std::set<std::string> names;
  for (const auto& [n, r] : a.relations) names.insert(n);
  for (const auto& [n, r] : b.relations) names.insert(n);
  return {names.begin(), names.end()};
}

void checkWitnessShape(const Structure& a, const Structure& b,
                       const MorphismWitness& w) {
  for (Label v : a.domain)
    if (!w.map.count(v))
      throw ContractError("verify: map not total, missing " + std::to_string(v));
  for (const auto& [p, q] : w.map) {
    if (!a.domain.count(p))
      throw ContractError("verify: map key " + std::to_string(p) +
                          " outside source domain");
    if (!b.domain.count(q))
      throw ContractError("verify: image " + std::to_string(q) +
                          " outside target domain");
  }
}

// Joint 1-WL refinement of two structures over the union signature; returns
// stable colors (shared id space). Sound filter for isomorphism candidates
// only: weaker kinds do not preserve stable colors.
struct JointColors {
  std::map<Label, int> a, b;
  bool classCountsMatch = true;
};

JointColors jointStableColoring(const Structure& sa, const Structure& sb) {
  const auto names = signatureUnion(sa, sb);
  const std::size_t nv = sa.domain.size() + sb.domain.size();

  std::map<Label, std::size_t> ia, ib;
  for (Label v : sa.domain) ia[v] = ia.size();
  for (Label v : sb.domain) ib[v] = sa.domain.size() + ib.size();
  // Joint index pairs per relation name; both structures share one space.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> arcs(names.size());
  for (std::size_t r = 0; r < names.size(); ++r) {
    for (const auto& [x, y] : sa.rel(names[r])) arcs[r].push_back({ia[x], ia[y]});
    for (const auto& [x, y] : sb.rel(names[r])) arcs[r].push_back({ib[x], ib[y]});
  }

  std::vector<int> color(nv, 0);
  int classes = nv == 0 ? 0 : 1;
  using Sig = std::vector<long long>;
  for (std::size_t round = 0; round <= nv + 1; ++round) {
    std::vector<Sig> sigs(nv);
    for (std::size_t i = 0; i < nv; ++i) sigs[i] = {color[i]};
    for (std::size_t r = 0; r < names.size(); ++r) {
      std::vector<std::vector<long long>> outs(nv), ins(nv);
      for (const auto& [x, y] : arcs[r]) {
        outs[x].push_back(color[y]);
        ins[y].push_back(color[x]);
      }
      for (std::size_t i = 0; i < nv; ++i) {
        std::sort(outs[i].begin(), outs[i].end());
        std::sort(ins[i].begin(), ins[i].end());
        sigs[i].push_back(-1);
        sigs[i].insert(sigs[i].end(), outs[i].begin(), outs[i].end());
        sigs[i].push_back(-2);
        sigs[i].insert(sigs[i].end(), ins[i].begin(), ins[i].end());
      }
    }
    std::vector<Sig> distinct = sigs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(nv);
    for (std::size_t i = 0; i < nv; ++i)
      next[i] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sigs[i]) -
          distinct.begin());
    const int nextClasses = static_cast<int>(distinct.size());
    color = std::move(next);
    if (nextClasses == classes) break;
    classes = nextClasses;
  }

  JointColors out;
  std::map<int, int> deltaPerColor;  // +1 per a-vertex, -1 per b-vertex
  for (const auto& [v, i] : ia) {
    out.a[v] = color[i];
    deltaPerColor[color[i]]++;
  }
  for (const auto& [v, i] : ib) {
    out.b[v] = color[i];
    deltaPerColor[color[i]]--;
  }
  for (const auto& [c, d] : deltaPerColor)
    if (d != 0) out.classCountsMatch = false;
  return out;
}

struct Searcher {
  const Structure& a;
  const Structure& b;
  MorphKind kind;
  bool strong, inj, sur;
  std::vector<std::string> names;
  std::vector<Label> va, vb;
  // adjacency matrices per relation, indexed [i * n + j]
  std::vector<std::vector<char>> adjA, adjB;
  std::vector<std::vector<int>> outDegA, inDegA, outDegB, inDegB;
  std::vector<int> colorA, colorB;  // iso only; empty otherwise
  bool hopeless = false;

  std::uint64_t budget = 0;
  std::uint64_t expansions = 0;
  bool exhausted = false;

  std::vector<int> assign;     // a-index -> b-index
  std::vector<char> used;      // b-index taken (injective kinds)
  std::vector<int> coverage;   // image multiplicity per b-index
  int covered = 0;

  std::vector<MorphismWitness> found;
  std::size_t limit = 1;

  Searcher(const Structure& a_, const Structure& b_, MorphKind k)
      : a(a_), b(b_), kind(k) {
    strong = kindStrong(k);
    inj = kindInjective(k);
    sur = kindSurjective(k);
    names = signatureUnion(a, b);
    va.assign(a.domain.begin(), a.domain.end());
    vb.assign(b.domain.begin(), b.domain.end());
    const std::size_t na = va.size(), nb = vb.size();

    if (inj && na > nb) hopeless = true;
    if (sur && na < nb) hopeless = true;

    std::map<Label, int> ia, ib;
    for (std::size_t i = 0; i < na; ++i) ia[va[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < nb; ++i) ib[vb[i]] = static_cast<int>(i);

    for (const auto& name : names) {
      std::vector<char> ma(na * na, 0), mb(nb * nb, 0);
      std::vector<int> oa(na, 0), iaDeg(na, 0), ob(nb, 0), ibDeg(nb, 0);
      for (const auto& [x, y] : a.rel(name)) {
        ma[static_cast<std::size_t>(ia[x]) * na + static_cast<std::size_t>(ia[y])] = 1;
        oa[static_cast<std::size_t>(ia[x])]++;
        iaDeg[static_cast<std::size_t>(ia[y])]++;
      }
      for (const auto& [x, y] : b.rel(name)) {
        mb[static_cast<std::size_t>(ib[x]) * nb + static_cast<std::size_t>(ib[y])] = 1;
        ob[static_cast<std::size_t>(ib[x])]++;
        ibDeg[static_cast<std::size_t>(ib[y])]++;
      }
      if (kind == MorphKind::Isomorphism &&
          a.rel(name).size() != b.rel(name).size())
        hopeless = true;
      if (kind == MorphKind::Embedding && a.rel(name).size() > b.rel(name).size())
        hopeless = true;
      if ((kind == MorphKind::Epimorphism || kind == MorphKind::Isomorphism) &&
          b.rel(name).size() > a.rel(name).size())
        hopeless = true;
      adjA.push_back(std::move(ma));
      adjB.push_back(std::move(mb));
      outDegA.push_back(std::move(oa));
      inDegA.push_back(std::move(iaDeg));
      outDegB.push_back(std::move(ob));
      inDegB.push_back(std::move(ibDeg));
    }

    if (kind == MorphKind::Isomorphism && !hopeless) {
      const JointColors jc = jointStableColoring(a, b);
      if (!jc.classCountsMatch) hopeless = true;
      colorA.resize(na);
      colorB.resize(nb);
      for (std::size_t i = 0; i < na; ++i) colorA[i] = jc.a.at(va[i]);
      for (std::size_t i = 0; i < nb; ++i) colorB[i] = jc.b.at(vb[i]);
    }

    assign.assign(na, -1);
    used.assign(nb, 0);
    coverage.assign(nb, 0);
  }

  bool degreesCompatible(std::size_t i, std::size_t u) const {
    for (std::size_t r = 0; r < names.size(); ++r) {
      const int oa = outDegA[r][i], ia = inDegA[r][i];
      const int ob = outDegB[r][u], ib = inDegB[r][u];
      switch (kind) {
        case MorphKind::Isomorphism:
          if (oa != ob || ia != ib) return false;
          break;
        case MorphKind::Embedding:
          if (ob < oa || ib < ia) return false;
          break;
        case MorphKind::Epimorphism:
          if (ob > oa || ib > ia) return false;
          break;
        default:
          break;
      }
    }
    return true;
  }

  bool consistent(std::size_t i, std::size_t u) const {
    const std::size_t na = va.size(), nb = vb.size();
    for (std::size_t r = 0; r < names.size(); ++r) {
      const auto& ma = adjA[r];
      const auto& mb = adjB[r];
      // loops
      const bool la = ma[i * na + i], lb = mb[u * nb + u];
      if (la && !lb) return false;
      if (strong && lb && !la) return false;
      for (std::size_t j = 0; j < i; ++j) {
        const std::size_t w = static_cast<std::size_t>(assign[j]);
        const bool aij = ma[i * na + j], aji = ma[j * na + i];
        const bool buw = mb[u * nb + w], bwu = mb[w * nb + u];
        if (aij && !buw) return false;
        if (aji && !bwu) return false;
        if (strong && (buw != aij || bwu != aji)) return false;
      }
    }
    return true;
  }

  // Depth-first in ascending label order with ascending candidates: the
  // first leaf is the lexicographically least witness.
  bool dfs(std::size_t i) {
    const std::size_t na = va.size(), nb = vb.size();
    if (i == na) {
      if (sur && covered != static_cast<int>(nb)) return false;
      MorphismWitness w;
      w.kind = kind;
      for (std::size_t j = 0; j < na; ++j)
        w.map[va[j]] = vb[static_cast<std::size_t>(assign[j])];
      found.push_back(std::move(w));
      return limit != 0 && found.size() >= limit;
    }
    for (std::size_t u = 0; u < nb; ++u) {
      if (budget != 0 && expansions >= budget) {
        exhausted = true;
        return true;
      }
      ++expansions;
      if (inj && used[u]) continue;
      if (!colorA.empty() && colorA[i] != colorB[u]) continue;
      if (!degreesCompatible(i, u)) continue;
      if (sur) {
        const int coveredNext = covered + (coverage[u] == 0 ? 1 : 0);
        const int remaining = static_cast<int>(na - i - 1);
        if (remaining < static_cast<int>(nb) - coveredNext) continue;
      }
      if (!consistent(i, u)) continue;

      assign[i] = static_cast<int>(u);
      used[u] = 1;
      if (coverage[u]++ == 0) ++covered;
      const bool stop = dfs(i + 1);
      if (--coverage[u] == 0) --covered;
      used[u] = 0;
      assign[i] = -1;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

std::string kindName(MorphKind k) {
  switch (k) {
    case MorphKind::Isomorphism: return "isomorphism";
    case MorphKind::Embedding: return "embedding";
    case MorphKind::Homomorphism: return "homomorphism";
    case MorphKind::WeakHomomorphism: return "weak-homomorphism";
    case MorphKind::Epimorphism: return "epimorphism";
    case MorphKind::WeakEpimorphism: return "weak-epimorphism";
  }
  throw ContractError("kindName: bad enum");
}

std::optional<MorphKind> kindFromName(const std::string& name) {
  for (MorphKind k :
       {MorphKind::Isomorphism, MorphKind::Embedding, MorphKind::Homomorphism,
        MorphKind::WeakHomomorphism, MorphKind::Epimorphism,
        MorphKind::WeakEpimorphism})
    if (kindName(k) == name) return k;
  return std::nullopt;
}

bool kindStrong(MorphKind k) {
  return k == MorphKind::Isomorphism || k == MorphKind::Embedding ||
         k == MorphKind::Homomorphism || k == MorphKind::Epimorphism;
}

bool kindInjective(MorphKind k) {
  return k == MorphKind::Isomorphism || k == MorphKind::Embedding;
}

bool kindSurjective(MorphKind k) {
  return k == MorphKind::Isomorphism || k == MorphKind::Epimorphism ||
         k == MorphKind::WeakEpimorphism;
}

bool verify(const Structure& a, const Structure& b, const MorphismWitness& w) {
  assertWellFormed(a, "verify");
  assertWellFormed(b, "verify");
  checkWitnessShape(a, b, w);

  if (kindInjective(w.kind)) {
    std::set<Label> image;
    for (const auto& [p, q] : w.map)
      if (!image.insert(q).second) return false;
  }
  if (kindSurjective(w.kind)) {
    std::set<Label> image;
    for (const auto& [p, q] : w.map) image.insert(q);
    if (image.size() != b.domain.size()) return false;
  }

  for (const auto& name : signatureUnion(a, b)) {
    if (kindStrong(w.kind)) {
      for (Label p : a.domain)
        for (Label q : a.domain)
          if (a.related(name, p, q) !=
              b.related(name, w.map.at(p), w.map.at(q)))
            return false;
    } else {
      for (const auto& [p, q] : a.rel(name))
        if (!b.related(name, w.map.at(p), w.map.at(q))) return false;
    }
  }
  return true;
}

SearchOutcome search(const Structure& a, const Structure& b, MorphKind k,
                     const SearchOptions& opts) {
  assertWellFormed(a, "search");
  assertWellFormed(b, "search");
  Searcher s(a, b, k);
  s.budget = opts.budget;
  s.limit = 1;
  SearchOutcome out;
  if (!s.hopeless) s.dfs(0);
  out.expansions = s.expansions;
  if (s.exhausted && s.found.empty()) {
    out.status = SearchStatus::BudgetExhausted;
  } else if (s.found.empty()) {
    out.status = SearchStatus::None;
  } else {
    out.status = SearchStatus::Found;
    out.witness = s.found.front();
  }
  return out;
}

std::vector<MorphismWitness> searchAll(const Structure& a, const Structure& b,
                                       MorphKind k, std::size_t limit) {
  assertWellFormed(a, "searchAll");
  assertWellFormed(b, "searchAll");
  Searcher s(a, b, k);
  s.limit = limit;
  if (!s.hopeless) s.dfs(0);
  return s.found;
}

MorphismWitness compose(const MorphismWitness& first,
                        const MorphismWitness& second) {
  MorphismWitness out;
  out.kind = first.kind;
  for (const auto& [p, q] : first.map) {
    auto it = second.map.find(q);
    if (it == second.map.end())
      throw ContractError("compose: " + std::to_string(q) +
                          " missing from second map");
    out.map[p] = it->second;
  }
  return out;
}

}  // namespace isoforge
