#include "isoforge/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "isoforge/coding.hpp"
#include "isoforge/corpus.hpp"
#include "isoforge/error.hpp"
#include "isoforge/morphism.hpp"
#include "isoforge/quotient.hpp"
#include "isoforge/structure.hpp"
#include "isoforge/sums.hpp"
#include "isoforge/treecode.hpp"
#include "isoforge/wspace.hpp"

namespace isoforge {

namespace {

constexpr std::size_t kMaxStoredFailures = 8;

// Per-criterion check collector. Messages are built lazily so passing checks
// in hot loops cost nothing.
struct Check {
  std::size_t instances = 0;
  std::size_t failureCount = 0;
  std::vector<std::string> messages;

  void expect(bool ok, const std::function<std::string()>& message) {
    ++instances;
    if (ok) return;
    ++failureCount;
    if (messages.size() < kMaxStoredFailures) messages.push_back(message());
  }

  void fail(const std::string& message) {
    ++failureCount;
    if (messages.size() < kMaxStoredFailures) messages.push_back(message);
  }

  bool ok() const { return failureCount == 0; }
};

std::string pairTag(std::size_t i, std::size_t j) {
  return "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
}

bool found(const Structure& a, const Structure& b, MorphKind kind) {
  return search(a, b, kind).status == SearchStatus::Found;
}

// --- oracle-vs-naive ------------------------------------------------------

// First verifying map in the same lexicographic order the oracle promises,
// by trying every one of the |b|^|a| candidates.
std::optional<MorphismWitness> naiveFirst(const Structure& a,
                                          const Structure& b, MorphKind kind) {
  const std::vector<Label> dom(a.domain.begin(), a.domain.end());
  const std::vector<Label> ran(b.domain.begin(), b.domain.end());
  if (dom.empty()) {
    MorphismWitness w;
    w.kind = kind;
    if (verify(a, b, w)) return w;
    return std::nullopt;
  }
  if (ran.empty()) return std::nullopt;

  std::vector<std::size_t> idx(dom.size(), 0);
  while (true) {
    MorphismWitness w;
    w.kind = kind;
    for (std::size_t i = 0; i < dom.size(); ++i) w.map[dom[i]] = ran[idx[i]];
    if (verify(a, b, w)) return w;
    std::size_t p = dom.size();
    while (p > 0) {
      if (++idx[p - 1] < ran.size()) break;
      idx[p - 1] = 0;
      --p;
    }
    if (p == 0) return std::nullopt;
  }
}

void runOracleVsNaive(Check& c, const SuiteOptions&) {
  const std::vector<Structure> corpus = smallGraphCorpus();
  constexpr MorphKind kKinds[] = {
      MorphKind::Isomorphism,    MorphKind::Embedding,
      MorphKind::Homomorphism,   MorphKind::WeakHomomorphism,
      MorphKind::Epimorphism,    MorphKind::WeakEpimorphism,
  };
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j)
      for (MorphKind kind : kKinds) {
        const auto naive = naiveFirst(corpus[i], corpus[j], kind);
        const SearchOutcome got = search(corpus[i], corpus[j], kind);
        const bool agree =
            (got.status == SearchStatus::Found) == naive.has_value() &&
            (!naive.has_value() ||
             (got.witness.has_value() && *got.witness == *naive &&
              verify(corpus[i], corpus[j], *got.witness)));
        c.expect(agree, [&] {
          return "oracle disagrees with exhaustive enumeration: " +
                 kindName(kind) + " at " + pairTag(i, j);
        });
      }
}

// --- t-iso-transfer (shared with swap-pairing) -----------------------------

// Codings see vertices only through edges, so the graph side of the transfer
// compares members padded up to the truncation alphabet; at that size the
// iso classes are exactly the edge counts.
std::vector<Structure> paddedCorpus() {
  std::vector<Structure> out;
  for (const Structure& x : smallGraphCorpus())
    out.push_back(padToDomain(x, {0, 1, 2}));
  return out;
}

void runTransferT(Check& c, const SuiteOptions& opts) {
  const std::vector<Structure> corpus = paddedCorpus();
  const TruncSpec spec{opts.maxLenT, 3};
  std::vector<TreeCode> codes;
  codes.reserve(corpus.size());
  for (const Structure& x : corpus) codes.push_back(buildT(x, spec));

  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const bool graphIso = found(corpus[i], corpus[j], MorphKind::Isomorphism);
      const SearchOutcome tree =
          search(codes[i].structure, codes[j].structure, MorphKind::Isomorphism);
      const bool treeIso = tree.status == SearchStatus::Found;
      c.expect(graphIso == treeIso, [&] {
        return std::string("iso transfer mismatch at ") + pairTag(i, j) +
               ": graph " + (graphIso ? "yes" : "no") + ", code " +
               (treeIso ? "yes" : "no");
      });
      if (graphIso)
        for (const MorphismWitness& sigma :
             searchAll(corpus[i], corpus[j], MorphKind::Isomorphism)) {
          const MorphismWitness lifted =
              liftIso(CodeKind::T, corpus[i], corpus[j], sigma, spec);
          c.expect(verify(codes[i].structure, codes[j].structure, lifted),
                   [&] { return "lifted iso fails verify at " + pairTag(i, j); });
        }
      if (treeIso) {
        const MorphismWitness back = extractIsoT(codes[i], codes[j], *tree.witness);
        c.expect(verify(corpus[i], corpus[j], back), [&] {
          return "extracted vertex map fails graph verify at " + pairTag(i, j);
        });
      }
    }
}

// --- universal-embedding (shared with swap-pairing) ------------------------

void runUniversalT(Check& c, const SuiteOptions&) {
  const std::vector<Structure> corpus = smallGraphCorpus();
  const TruncSpec spec{2, 3};
  std::vector<TreeCode> sources;
  std::vector<UniversalEmbedding> maps;
  sources.reserve(corpus.size());
  for (const Structure& x : corpus) {
    sources.push_back(buildT(x, spec));
    maps.push_back(universalImageMap(sources.back()));
    c.expect(maps.back().targetSpec == maps.front().targetSpec, [&] {
      return "reported target spec varies across sources";
    });
  }

  for (std::size_t j = 0; j < corpus.size(); ++j) {
    const TreeCode target = buildT(corpus[j], maps.front().targetSpec);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const MorphismWitness w = bindUniversalEmbedding(maps[i], sources[i], target);
      c.expect(w.kind == MorphKind::Embedding &&
                   verify(sources[i].structure, target.structure, w),
               [&] {
                 return "universal embedding fails verify at " + pairTag(i, j);
               });
    }
  }
}

// --- r-codes ----------------------------------------------------------------

void runRCodes(Check& c, const SuiteOptions&) {
  const std::vector<Structure> corpus = paddedCorpus();
  const TruncSpec spec{2, 4};
  std::vector<TreeCode> codes;
  codes.reserve(corpus.size());
  for (const Structure& x : corpus) codes.push_back(buildR(x, spec));

  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const bool graphIso = found(corpus[i], corpus[j], MorphKind::Isomorphism);
      const bool codeIso =
          found(codes[i].structure, codes[j].structure, MorphKind::Isomorphism);
      c.expect(graphIso == codeIso, [&] {
        return std::string("iso transfer mismatch at ") + pairTag(i, j) +
               ": graph " + (graphIso ? "yes" : "no") + ", code " +
               (codeIso ? "yes" : "no");
      });
    }

  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j)
      for (const MorphismWitness& f :
           searchAll(corpus[i], corpus[j], MorphKind::Embedding)) {
        const WeakEpiResult wer = weakEpiR(corpus[i], corpus[j], f, spec);
        c.expect(wer.witness.kind == MorphKind::WeakEpimorphism &&
                     verify(wer.from.structure, wer.to.structure, wer.witness),
                 [&] {
                   return "induced weak epimorphism fails verify at " +
                          pairTag(i, j);
                 });
      }
}

// --- w-space ----------------------------------------------------------------

// Kit members live in the ordered-graph signature; a code enters a family by
// carrying an explicit empty graph part next to its tree and order relations.
Structure asKitMember(TreeCode code) {
  Structure s = std::move(code.structure);
  s.relations["edge"];
  return s;
}

void checkSpace(Check& c, const std::string& tag, const WSpace& w) {
  const std::size_t n = w.entries.size();
  c.expect(n > 0, [&] { return tag + ": space is empty"; });

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      c.expect(w.images[i] != w.images[j], [&] {
        return tag + ": images of entries " + std::to_string(i) + " and " +
               std::to_string(j) + " coincide";
      });

  std::vector<std::pair<Structure, Structure>> parts;
  parts.reserve(n);
  for (const Structure& img : w.images) parts.push_back(splitParts(img));

  const auto respectsParts = [&parts](const MorphismWitness& m, std::size_t i,
                                      std::size_t j) {
    for (const auto& [u, v] : m.map) {
      const bool uFirst = parts[i].first.domain.count(u) > 0;
      const bool vFirst = parts[j].first.domain.count(v) > 0;
      if (uFirst != vFirst) return false;
    }
    return true;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SearchOutcome emb =
          search(w.images[i], w.images[j], MorphKind::Embedding);
      c.expect((emb.status == SearchStatus::Found) == bool(w.S[i][j]), [&] {
        return tag + ": S[" + std::to_string(i) + "][" + std::to_string(j) +
               "] = " + (w.S[i][j] ? "1" : "0") +
               " but an image embedding is " +
               (emb.status == SearchStatus::Found ? "found" : "absent");
      });
      if (emb.status == SearchStatus::Found)
        c.expect(respectsParts(*emb.witness, i, j), [&] {
          return tag + ": image embedding at (" + std::to_string(i) + "," +
                 std::to_string(j) + ") mixes the parts";
        });

      const SearchOutcome iso =
          search(w.images[i], w.images[j], MorphKind::Isomorphism);
      c.expect((iso.status == SearchStatus::Found) == bool(w.F[i][j]), [&] {
        return tag + ": F[" + std::to_string(i) + "][" + std::to_string(j) +
               "] = " + (w.F[i][j] ? "1" : "0") +
               " but an image isomorphism is " +
               (iso.status == SearchStatus::Found ? "found" : "absent");
      });
      if (iso.status == SearchStatus::Found)
        c.expect(respectsParts(*iso.witness, i, j), [&] {
          return tag + ": image isomorphism at (" + std::to_string(i) + "," +
                 std::to_string(j) + ") mixes the parts";
        });
    }
}

// Codes at depth 3 over three letters have 50 + 3|edge| nodes, so the edge
// count (hence the padded iso class) is a function of the domain size alone.
std::size_t codeClass(const Structure& z) {
  return (z.domain.size() - 50) / 6;
}

void runWSpace(Check& c, const SuiteOptions&) {
  // Uniform kit: depth-2 codes carry no odd-length terminals, so every
  // member is literally the same structure and one target class suffices.
  WitnessKit uniform;
  uniform.familyPrime = {makeOrderedGraph({0}, {}, {})};
  for (const Structure& x : smallGraphCorpus())
    uniform.familySecond.push_back(asKitMember(buildT(x, TruncSpec{2, 3})));
  uniform.classify = [](const Structure&) { return std::size_t{0}; };
  const Structure uniformPick = uniform.familySecond.front();
  uniform.section = [uniformPick](std::size_t) { return uniformPick; };
  for (int k = 1; k <= 2; ++k)
    checkSpace(c, "uniform k=" + std::to_string(k), assembleW(uniform, k));

  // Classified kit: one pairwise-incomparable ordered graph per code class,
  // so S and F both hold exactly within a class.
  WitnessKit classified;
  classified.familyPrime = {
      makeOrderedGraph({0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}, {}),
      makeOrderedGraph({0, 1, 2}, {{0, 1}, {1, 2}}, {}),
      makeOrderedGraph({0, 1, 2}, {}, {}),
      makeOrderedGraph({0, 1, 2}, {}, {{0, 1}, {0, 2}, {1, 2}}),
  };
  for (const Structure& x : smallGraphCorpus())
    classified.familySecond.push_back(asKitMember(buildT(x, TruncSpec{3, 3})));
  classified.classify = codeClass;
  std::vector<Structure> picks(classified.familyPrime.size());
  for (const Structure& z : classified.familySecond) {
    Structure& slot = picks[codeClass(z)];
    if (slot.domain.empty()) slot = z;
  }
  classified.section = [picks](std::size_t cls) { return picks.at(cls); };
  for (int k = 1; k <= 2; ++k)
    checkSpace(c, "classified k=" + std::to_string(k), assembleW(classified, k));

  // Named-classes variant: first two classes named, the third is the
  // residual, which must be (and is) a single iso class.
  WitnessKit named;
  named.familyPrime = {classified.familyPrime[0], classified.familyPrime[1],
                       classified.familyPrime[2]};
  for (const Structure& z : classified.familySecond)
    if (codeClass(z) <= 2) named.familySecond.push_back(z);
  named.classify = codeClass;
  const std::vector<ClassRep> reps = {
      {named.familyPrime[0], asKitMember(buildT(edgelessGraph(3), TruncSpec{3, 3}))},
      {named.familyPrime[1],
       asKitMember(buildT(makeGraph({0, 1, 2}, {{0, 1}}), TruncSpec{3, 3}))},
      {named.familyPrime[2],
       asKitMember(buildT(makeGraph({0, 1, 2}, {{0, 1}, {0, 2}}), TruncSpec{3, 3}))},
  };
  checkSpace(c, "named-classes k=2", assembleW(named, 2, reps));
}

// --- parity-group -----------------------------------------------------------

void runParityGroup(Check& c, const SuiteOptions&) {
  constexpr std::size_t kCentral[] = {2, 6, 20, 70};  // C(2k, k)
  for (int k = 1; k <= 4; ++k) {
    const std::vector<ParityPerm> perms = enumerateG(k);
    bool wellFormed = true;
    std::set<std::vector<int>> distinct;
    for (const ParityPerm& g : perms) {
      wellFormed = wellFormed && isParityMonotone(g.images);
      distinct.insert(g.images);
    }
    c.expect(perms.size() == kCentral[k - 1] && wellFormed &&
                 distinct.size() == perms.size(),
             [&] {
               return "enumerateG(" + std::to_string(k) + ") has " +
                      std::to_string(perms.size()) + " members, expected " +
                      std::to_string(kCentral[k - 1]);
             });

    std::map<std::set<int>, std::vector<int>> byOddImage;
    for (const ParityPerm& g : perms) {
      std::set<int> odd;
      for (int n = 0; n < k; ++n) odd.insert(g(2 * n + 1));
      const auto [it, fresh] = byOddImage.emplace(odd, g.images);
      c.expect(fresh, [&] {
        return "odd image set fails to determine the permutation at k=" +
               std::to_string(k);
      });
    }
  }

  for (int k = 1; k <= 3; ++k) {
    std::vector<int> h(2 * static_cast<std::size_t>(k));
    std::iota(h.begin(), h.end(), 0);
    std::vector<int> sortedK(static_cast<std::size_t>(k));
    std::iota(sortedK.begin(), sortedK.end(), 0);
    do {
      const ParityDecomposition d = decomposeParity(h);
      bool ok = isParityMonotone(d.g.images);
      std::vector<int> p = d.p, q = d.q;
      std::sort(p.begin(), p.end());
      std::sort(q.begin(), q.end());
      ok = ok && p == sortedK && q == sortedK;
      for (int n = 0; ok && n < k; ++n)
        ok = h[2 * static_cast<std::size_t>(n)] == d.g(2 * d.p[static_cast<std::size_t>(n)]) &&
             h[2 * static_cast<std::size_t>(n) + 1] ==
                 d.g(2 * d.q[static_cast<std::size_t>(n)] + 1);
      c.expect(ok, [&] {
        std::ostringstream os;
        os << "decomposition identities fail at h = [";
        for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
        os << "]";
        return os.str();
      });
    } while (std::next_permutation(h.begin(), h.end()));
  }
}

// --- schroeder-bernstein ----------------------------------------------------

FinPartition randomPartition(std::mt19937_64& rng, std::size_t nBlocks) {
  FinPartition p;
  Label next = 0;
  for (std::size_t b = 0; b < nBlocks; ++b) {
    const std::size_t size = 1 + rng() % 3;
    std::set<Label> block;
    for (std::size_t i = 0; i < size; ++i) {
      block.insert(next);
      p.ground.insert(next);
      ++next;
    }
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Label pickFrom(const std::set<Label>& block, std::mt19937_64& rng) {
  auto it = block.begin();
  std::advance(it, static_cast<long>(rng() % block.size()));
  return *it;
}

void runSchroederBernstein(Check& c, const SuiteOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t nBlocks = 1 + rng() % 20;
    const FinPartition e = randomPartition(rng, nBlocks);
    const FinPartition g = randomPartition(rng, nBlocks);

    std::vector<std::size_t> fwd(nBlocks);
    std::iota(fwd.begin(), fwd.end(), std::size_t{0});
    for (std::size_t i = nBlocks; i > 1; --i)
      std::swap(fwd[i - 1], fwd[rng() % i]);
    std::vector<std::size_t> bwd(nBlocks);
    for (std::size_t i = 0; i < nBlocks; ++i) bwd[fwd[i]] = i;

    ReductionMap phi, psi;
    for (std::size_t i = 0; i < nBlocks; ++i)
      for (Label u : e.blocks[i]) phi[u] = pickFrom(g.blocks[fwd[i]], rng);
    for (std::size_t j = 0; j < nBlocks; ++j)
      for (Label v : g.blocks[j]) psi[v] = pickFrom(e.blocks[bwd[j]], rng);

    try {
      const SBResult r = sbBijection(e, g, phi, psi);
      c.expect(checkClasswiseIso(r.phiPrime, r.psiPrime, e, g), [&] {
        return "liftings fail the classwise check at trial " +
               std::to_string(trial);
      });
    } catch (const std::exception& err) {
      c.fail("trial " + std::to_string(trial) + " raised: " + err.what());
    }
  }
}

// --- coding -----------------------------------------------------------------

void runCoding(Check& c, const SuiteOptions&) {
  for (Nat n = 0; n <= 50; ++n)
    for (Nat m = 0; m <= 50; ++m) {
      const Nat k = pairIndex(n, m);
      c.expect(unpairIndex(k) == std::pair<Nat, Nat>{n, m} && n <= k && m <= k,
               [&] {
                 return "pairing not inverse or not monotone at (" +
                        std::to_string(n) + "," + std::to_string(m) + ")";
               });
    }

  // Density shadow: every prefix extends to an even length whose relevant
  // positions sit beyond it, so any target pair can be carried.
  for (std::size_t len0 = 0; len0 <= 20; ++len0) {
    Seq prefix(len0);
    for (std::size_t i = 0; i < len0; ++i) prefix[i] = static_cast<Nat>(i % 3);
    for (Nat a = 0; a < 4; ++a)
      for (Nat b = 0; b < 4; ++b) {
        bool carried = false;
        for (Nat L = 1; L <= 600 && !carried; ++L) {
          const auto [n, m] = unpairIndex(L - 1);
          if (2 * n < len0 + 1 || 2 * m < len0 + 1) continue;
          if (n == m && a != b) continue;
          Seq v(2 * static_cast<std::size_t>(L), 0);
          std::copy(prefix.begin(), prefix.end(), v.begin());
          v[static_cast<std::size_t>(2 * n)] = a;
          v[static_cast<std::size_t>(2 * m)] = b;
          carried = relevantPair(evenSubsequence(v)) == std::pair<Nat, Nat>{a, b};
          break;
        }
        c.expect(carried, [&] {
          return "no even extension carries (" + std::to_string(a) + "," +
                 std::to_string(b) + ") beyond a prefix of length " +
                 std::to_string(len0);
        });
      }
  }
}

// --- swap-pairing -----------------------------------------------------------

void runSwapPairing(Check& c, const SuiteOptions& opts) {
  Check base2, base3;
  runTransferT(base2, opts);
  runUniversalT(base3, opts);

  Check swapped2, swapped3;
  {
    PairingGuard guard(Pairing::cantorSwapped());
    runTransferT(swapped2, opts);
    runUniversalT(swapped3, opts);
  }

  c.instances += base2.instances + base3.instances + swapped2.instances +
                 swapped3.instances;
  c.expect(base2.ok() == swapped2.ok(), [&] {
    return std::string("iso transfer outcome changes under the swapped "
                       "pairing: ") +
           (base2.ok() ? "pass" : "fail") + " vs " +
           (swapped2.ok() ? "pass" : "fail");
  });
  c.expect(base3.ok() == swapped3.ok(), [&] {
    return std::string("universal embedding outcome changes under the "
                       "swapped pairing: ") +
           (base3.ok() ? "pass" : "fail") + " vs " +
           (swapped3.ok() ? "pass" : "fail");
  });
}

// --- registry ---------------------------------------------------------------

struct CriterionSpec {
  const char* name;
  double budgetSeconds;  // 0 = no runtime gate
  void (*run)(Check&, const SuiteOptions&);
};

// Name order; the report keeps it.
constexpr CriterionSpec kCriteria[] = {
    {"coding", 0.0, runCoding},
    {"oracle-vs-naive", 30.0, runOracleVsNaive},
    {"parity-group", 0.0, runParityGroup},
    {"r-codes", 300.0, runRCodes},
    {"schroeder-bernstein", 10.0, runSchroederBernstein},
    {"swap-pairing", 0.0, runSwapPairing},
    {"t-iso-transfer", 300.0, runTransferT},
    {"universal-embedding", 0.0, runUniversalT},
    {"w-space", 600.0, runWSpace},
};

std::string rowLine(const CriterionResult& row) {
  std::ostringstream os;
  os << (row.passed ? "[PASS] " : "[FAIL] ") << row.name;
  for (std::size_t i = row.name.size(); i < 22; ++i) os << ' ';
  os << row.instances << " instances  " << std::fixed << std::setprecision(2)
     << row.seconds << "s";
  return os.str();
}

}  // namespace

bool SuiteReport::allPassed() const {
  for (const CriterionResult& row : rows)
    if (!row.passed) return false;
  return !rows.empty();
}

SuiteReport runSuite(const SuiteOptions& opts, std::ostream* progress) {
  SuiteReport report;
  for (const CriterionSpec& spec : kCriteria) {
    const std::string name = spec.name;
    if (!opts.filter.empty() && name.find(opts.filter) == std::string::npos)
      continue;

    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      spec.run(check, opts);
    } catch (const std::exception& e) {
      check.fail(std::string("unhandled error: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    if (check.instances == 0) check.fail("criterion ran no instances");
    if (spec.budgetSeconds > 0 && seconds >= spec.budgetSeconds)
      check.fail("runtime budget exceeded: " + std::to_string(seconds) +
                 "s >= " + std::to_string(spec.budgetSeconds) + "s");

    CriterionResult row;
    row.name = name;
    row.passed = check.ok();
    row.instances = check.instances;
    row.failureCount = check.failureCount;
    row.seconds = seconds;
    row.failures = std::move(check.messages);
    if (check.failureCount > row.failures.size())
      row.failures.push_back(
          "... and " +
          std::to_string(check.failureCount - row.failures.size()) +
          " more failures");
    report.rows.push_back(std::move(row));

    if (progress) {
      *progress << rowLine(report.rows.back()) << '\n';
      for (const std::string& msg : report.rows.back().failures)
        *progress << "       " << msg << '\n';
      progress->flush();
    }
  }
  return report;
}

std::string reportText(const SuiteReport& report) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const CriterionResult& row : report.rows) {
    os << rowLine(row) << '\n';
    for (const std::string& msg : row.failures) os << "       " << msg << '\n';
    if (row.passed) ++passed;
  }
  os << passed << "/" << report.rows.size() << " criteria passed\n";
  return os.str();
}

std::string reportJson(const SuiteReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const CriterionResult& row : report.rows) {
    rows.push_back({{"name", row.name},
                    {"passed", row.passed},
                    {"instances", row.instances},
                    {"failureCount", row.failureCount},
                    {"seconds", row.seconds},
                    {"failures", row.failures}});
  }
  nlohmann::json doc{{"criteria", std::move(rows)},
                     {"passed", report.allPassed()}};
  return doc.dump(2) + "\n";
}

}  // namespace isoforge
