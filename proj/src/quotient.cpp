#include "isoforge/quotient.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

std::map<Label, std::size_t> blockIndex(const FinPartition& p) {
  std::map<Label, std::size_t> out;
  for (std::size_t i = 0; i < p.blocks.size(); ++i)
    for (Label v : p.blocks[i]) out[v] = i;
  return out;
}

// Totality and range screening shared by every map-consuming operation.
void checkBetween(const ReductionMap& f, const FinPartition& e,
                  const FinPartition& g, const std::string& who) {
  for (Label v : e.ground) {
    auto it = f.find(v);
    if (it == f.end())
      throw ContractError(who + ": map misses ground element " +
                          std::to_string(v));
    if (!g.ground.count(it->second))
      throw ContractError(who + ": image of " + std::to_string(v) + " is " +
                          std::to_string(it->second) +
                          ", outside the target ground set");
  }
}

// The induced map on block indices; requires f to be a reduction, which the
// callers have already established.
std::vector<std::size_t> factoring(const ReductionMap& f, const FinPartition& e,
                                   const std::map<Label, std::size_t>& gIdx) {
  std::vector<std::size_t> out;
  out.reserve(e.blocks.size());
  for (const auto& block : e.blocks)
    out.push_back(gIdx.at(f.at(*block.begin())));
  return out;
}

void sortBlocksByMin(FinPartition& p) {
  std::sort(p.blocks.begin(), p.blocks.end(),
            [](const std::set<Label>& a, const std::set<Label>& b) {
              return *a.begin() < *b.begin();
            });
}

}  // namespace

void assertPartition(const FinPartition& p) {
  std::set<Label> seen;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& block = p.blocks[i];
    if (block.empty())
      throw ContractError("partition: block " + std::to_string(i) +
                          " is empty");
    for (Label v : block) {
      if (!p.ground.count(v))
        throw ContractError("partition: block element " + std::to_string(v) +
                            " is not in the ground set");
      if (!seen.insert(v).second)
        throw ContractError("partition: element " + std::to_string(v) +
                            " appears in two blocks");
    }
  }
  if (seen.size() != p.ground.size())
    throw ContractError("partition: blocks do not cover the ground set");
}

bool checkReduction(const ReductionMap& f, const FinPartition& e,
                    const FinPartition& g) {
  assertPartition(e);
  assertPartition(g);
  checkBetween(f, e, g, "checkReduction");
  const auto eIdx = blockIndex(e);
  const auto gIdx = blockIndex(g);
  for (Label x : e.ground)
    for (Label y : e.ground) {
      const bool sameE = eIdx.at(x) == eIdx.at(y);
      const bool sameG = gIdx.at(f.at(x)) == gIdx.at(f.at(y));
      if (sameE != sameG) return false;
    }
  return true;
}

bool checkClasswiseIso(const ReductionMap& phi, const ReductionMap& psi,
                       const FinPartition& e, const FinPartition& g) {
  if (!checkReduction(phi, e, g) || !checkReduction(psi, g, e)) return false;
  const auto eIdx = blockIndex(e);
  const auto gIdx = blockIndex(g);
  const auto phiHat = factoring(phi, e, gIdx);
  const auto psiHat = factoring(psi, g, eIdx);
  for (std::size_t i = 0; i < e.blocks.size(); ++i)
    if (psiHat[phiHat[i]] != i) return false;
  for (std::size_t j = 0; j < g.blocks.size(); ++j)
    if (phiHat[psiHat[j]] != j) return false;
  return true;
}

SBResult sbBijection(const FinPartition& e, const FinPartition& g,
                     const ReductionMap& phi, const ReductionMap& psi) {
  assertPartition(e);
  assertPartition(g);
  checkBetween(phi, e, g, "sbBijection: phi");
  checkBetween(psi, g, e, "sbBijection: psi");
  const auto eIdx = blockIndex(e);
  const auto gIdx = blockIndex(g);

  // Factoring exists (blocks map into blocks) and is injective; together
  // this says the map is a reduction.
  auto factorInjective = [](const ReductionMap& f, const FinPartition& from,
                            const std::map<Label, std::size_t>& toIdx,
                            std::size_t targets, const std::string& name) {
    std::vector<std::size_t> hat;
    for (std::size_t i = 0; i < from.blocks.size(); ++i) {
      const auto& block = from.blocks[i];
      const std::size_t target = toIdx.at(f.at(*block.begin()));
      for (Label v : block)
        if (toIdx.at(f.at(v)) != target)
          throw ContractError("sbBijection: " + name +
                              " does not respect blocks: " +
                              std::to_string(*block.begin()) + " and " +
                              std::to_string(v) +
                              " share a block but their images do not");
      hat.push_back(target);
    }
    std::vector<std::size_t> originOf(targets, SIZE_MAX);
    for (std::size_t i = 0; i < hat.size(); ++i) {
      if (originOf[hat[i]] != SIZE_MAX)
        throw ContractError("sbBijection: " + name +
                            " factoring not injective: blocks " +
                            std::to_string(originOf[hat[i]]) + " and " +
                            std::to_string(i) + " both land on block " +
                            std::to_string(hat[i]));
      originOf[hat[i]] = i;
    }
    return hat;
  };
  const auto phiHat = factorInjective(phi, e, gIdx, g.blocks.size(), "phi");
  const auto psiHat = factorInjective(psi, g, eIdx, e.blocks.size(), "psi");

  SBResult out;
  out.blockMap.assign(e.blocks.size(), SIZE_MAX);

  // Chains seeded at g-blocks outside the phi image run backwards through
  // psi; with finite ground sets both factorings are bijections, so this
  // loop only matters as the tie-breaking convention.
  std::vector<bool> isPhiImage(g.blocks.size(), false);
  for (std::size_t j : phiHat) isPhiImage[j] = true;
  for (std::size_t j = 0; j < g.blocks.size(); ++j) {
    if (isPhiImage[j]) continue;
    std::size_t c = j;
    while (true) {
      const std::size_t b = psiHat[c];
      if (out.blockMap[b] != SIZE_MAX) break;
      out.blockMap[b] = c;
      c = phiHat[b];
    }
  }
  for (std::size_t i = 0; i < e.blocks.size(); ++i)
    if (out.blockMap[i] == SIZE_MAX) out.blockMap[i] = phiHat[i];

  std::vector<std::size_t> inverse(g.blocks.size(), SIZE_MAX);
  for (std::size_t i = 0; i < e.blocks.size(); ++i) {
    if (out.blockMap[i] == SIZE_MAX || inverse[out.blockMap[i]] != SIZE_MAX)
      throw ContractError("sbBijection: chain decomposition failed to produce a bijection");
    inverse[out.blockMap[i]] = i;
  }
  for (std::size_t j = 0; j < g.blocks.size(); ++j)
    if (inverse[j] == SIZE_MAX)
      throw ContractError("sbBijection: chain decomposition failed to produce a bijection");

  for (std::size_t i = 0; i < e.blocks.size(); ++i)
    for (Label v : e.blocks[i])
      out.phiPrime[v] = *g.blocks[out.blockMap[i]].begin();
  for (std::size_t j = 0; j < g.blocks.size(); ++j)
    for (Label v : g.blocks[j]) out.psiPrime[v] = *e.blocks[inverse[j]].begin();
  return out;
}

FinPartition disjointUnion(const FinPartition& e, const FinPartition& g) {
  assertPartition(e);
  assertPartition(g);
  FinPartition out;
  for (Label v : e.ground) out.ground.insert(2 * v);
  for (Label v : g.ground) out.ground.insert(2 * v + 1);
  for (const auto& block : e.blocks) {
    std::set<Label> doubled;
    for (Label v : block) doubled.insert(2 * v);
    out.blocks.push_back(std::move(doubled));
  }
  for (const auto& block : g.blocks) {
    std::set<Label> shifted;
    for (Label v : block) shifted.insert(2 * v + 1);
    out.blocks.push_back(std::move(shifted));
  }
  sortBlocksByMin(out);
  return out;
}

std::set<Label> saturate(const std::set<Label>& a, const FinPartition& e) {
  assertPartition(e);
  for (Label v : a)
    if (!e.ground.count(v))
      throw ContractError("saturate: element " + std::to_string(v) +
                          " is outside the ground set");
  std::set<Label> out;
  for (const auto& block : e.blocks) {
    const bool meets = std::any_of(block.begin(), block.end(),
                                   [&a](Label v) { return a.count(v) != 0; });
    if (meets) out.insert(block.begin(), block.end());
  }
  return out;
}

FinPartition essentiallyRefine(const FinPartition& e, const std::set<Label>& xF) {
  if (saturate(xF, e) != xF)
    throw ContractError("essentiallyRefine: the given set is not saturated");
  FinPartition out;
  out.ground = e.ground;
  std::set<Label> rest;
  for (const auto& block : e.blocks) {
    if (xF.count(*block.begin()))
      out.blocks.push_back(block);
    else
      rest.insert(block.begin(), block.end());
  }
  if (!rest.empty()) out.blocks.push_back(std::move(rest));
  sortBlocksByMin(out);
  return out;
}

}  // namespace isoforge
