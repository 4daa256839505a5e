#include "isoforge/wspace.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

#include "isoforge/error.hpp"
#include "isoforge/morphism.hpp"

namespace isoforge {

namespace {

// Deduplicated structure table with memoized pairwise oracle results, so a
// space whose entries share parts never repeats a search.
class PairOracle {
 public:
  std::size_t indexOf(const Structure& s) {
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    const std::size_t i = members_.size();
    members_.push_back(s);
    index_.emplace(s, i);
    return i;
  }

  bool related(std::size_t i, std::size_t j, MorphKind kind) {
    auto key = std::make_tuple(i, j, kind);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const bool hit =
        search(members_[i], members_[j], kind).status == SearchStatus::Found;
    cache_.emplace(key, hit);
    return hit;
  }

 private:
  std::vector<Structure> members_;
  std::map<Structure, std::size_t> index_;
  std::map<std::tuple<std::size_t, std::size_t, MorphKind>, bool> cache_;
};

void checkOrderedFamily(const std::vector<Structure>& family, bool reflexive,
                        const std::string& name) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Structure& s = family[i];
    const auto diags = validate(s, StructureClass::OrderedGraph);
    if (!diags.empty())
      throw ContractError("validateKit: " + name + "[" + std::to_string(i) +
                          "] is not a valid ordered graph: " + diags.front());
    for (Label v : s.domain)
      if (s.related("order", v, v) != reflexive)
        throw ContractError("validateKit: " + name + "[" + std::to_string(i) +
                            "] order must be " +
                            (reflexive ? "reflexive" : "irreflexive") +
                            ", offending vertex " + std::to_string(v));
  }
}

std::vector<std::size_t> classifyAll(const WitnessKit& kit) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kit.familySecond.size(); ++i) {
    const std::size_t c = kit.classify(kit.familySecond[i]);
    if (c >= kit.familyPrime.size())
      throw ContractError("validateKit: classify(familySecond[" +
                          std::to_string(i) + "]) = " + std::to_string(c) +
                          " is out of range");
    out.push_back(c);
  }
  return out;
}

WSpace assembleFrom(const WitnessKit& kit, int k,
                    const std::function<const Structure&(const Structure&)>& targetFor,
                    PairOracle& oracle) {
  const std::vector<ParityPerm> perms = enumerateG(k);

  std::vector<WEntry> entries;
  for (const Structure& z : kit.familySecond) {
    const std::size_t target = oracle.indexOf(targetFor(z));
    for (const Structure& x : kit.familyPrime) {
      if (!oracle.related(oracle.indexOf(x), target, MorphKind::Isomorphism))
        continue;
      for (const ParityPerm& g : perms) entries.push_back({x, z, g});
    }
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

  WSpace space;
  space.entries = std::move(entries);
  const std::size_t n = space.entries.size();

  std::vector<std::size_t> xIdx(n), zIdx(n);
  for (std::size_t i = 0; i < n; ++i) {
    xIdx[i] = oracle.indexOf(space.entries[i].x);
    zIdx[i] = oracle.indexOf(space.entries[i].z);
  }
  space.S.assign(n, std::vector<bool>(n, false));
  space.F.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      space.S[i][j] = oracle.related(xIdx[i], xIdx[j], MorphKind::Embedding);
      space.F[i][j] = oracle.related(zIdx[i], zIdx[j], MorphKind::Isomorphism);
    }

  space.images.reserve(n);
  for (const WEntry& w : space.entries)
    space.images.push_back(logicAction(w.g.images, oplus(w.x, w.z)));
  return space;
}

}  // namespace

void validateKit(const WitnessKit& kit) {
  if (!kit.classify)
    throw ContractError("validateKit: kit has no classifier");
  checkOrderedFamily(kit.familyPrime, false, "familyPrime");
  checkOrderedFamily(kit.familySecond, true, "familySecond");

  const std::vector<std::size_t> classes = classifyAll(kit);
  PairOracle oracle;
  for (std::size_t i = 0; i < kit.familySecond.size(); ++i)
    for (std::size_t j = i + 1; j < kit.familySecond.size(); ++j) {
      if (classes[i] == classes[j]) continue;
      if (oracle.related(oracle.indexOf(kit.familySecond[i]),
                         oracle.indexOf(kit.familySecond[j]),
                         MorphKind::Isomorphism))
        throw ContractError(
            "validateKit: classifier not iso-invariant: familySecond[" +
            std::to_string(i) + "] and familySecond[" + std::to_string(j) +
            "] are isomorphic but classify to " + std::to_string(classes[i]) +
            " and " + std::to_string(classes[j]));
    }

  if (kit.section)
    for (std::size_t c : classes) {
      const Structure picked = kit.section(c);
      if (kit.classify(picked) != c)
        throw ContractError("validateKit: section(" + std::to_string(c) +
                            ") classifies to " +
                            std::to_string(kit.classify(picked)));
    }
}

WSpace assembleW(const WitnessKit& kit, int k) {
  validateKit(kit);
  PairOracle oracle;
  auto targetFor = [&kit](const Structure& z) -> const Structure& {
    return kit.familyPrime[kit.classify(z)];
  };
  return assembleFrom(kit, k, targetFor, oracle);
}

WSpace assembleW(const WitnessKit& kit, int k, const std::vector<ClassRep>& reps) {
  validateKit(kit);
  if (reps.empty())
    throw ContractError("assembleW: the n-classes variant needs at least one representative");
  PairOracle oracle;
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      if (oracle.related(oracle.indexOf(reps[i].z), oracle.indexOf(reps[j].z),
                         MorphKind::Isomorphism))
        throw ContractError("assembleW: representatives " + std::to_string(i) +
                            " and " + std::to_string(j) +
                            " have isomorphic z-parts");

  auto targetFor = [&reps, &oracle](const Structure& z) -> const Structure& {
    const std::size_t zi = oracle.indexOf(z);
    for (std::size_t i = 0; i + 1 < reps.size(); ++i)
      if (oracle.related(zi, oracle.indexOf(reps[i].z), MorphKind::Isomorphism))
        return reps[i].x;
    return reps.back().x;
  };
  return assembleFrom(kit, k, targetFor, oracle);
}

}  // namespace isoforge
