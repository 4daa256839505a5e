#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "isoforge/corpus.hpp"
#include "isoforge/error.hpp"
#include "isoforge/morphism.hpp"
#include "isoforge/sums.hpp"
#include "isoforge/wspace.hpp"

using namespace isoforge;

namespace {

Structure shiftCopy(const Structure& s, Label mul, Label add) {
  Structure out;
  out.kindHint = s.kindHint;
  for (Label v : s.domain) out.domain.insert(mul * v + add);
  for (const auto& [name, pairs] : s.relations) {
    PairSet& target = out.relations[name];
    for (const auto& [u, v] : pairs)
      target.insert({mul * u + add, mul * v + add});
  }
  return out;
}

std::vector<int> identityPerm(int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
  return out;
}

// Kit with two classes keyed by vertex count: singleton structures go to
// index 0, everything larger to index 1.
WitnessKit twoClassKit() {
  WitnessKit kit;
  kit.familyPrime = {makeOrderedGraph({0}, {}, {}),
                     makeOrderedGraph({0, 1}, {{0, 1}}, {})};
  kit.familySecond = {makeOrderedGraph({0}, {}, {{0, 0}}),
                      makeOrderedGraph({0, 1}, {}, {{0, 0}, {1, 1}, {0, 1}})};
  kit.classify = [](const Structure& z) {
    return z.domain.size() > 1 ? std::size_t{1} : std::size_t{0};
  };
  return kit;
}

}  // namespace

TEST_CASE("oplus pinned examples") {
  const Structure x = makeOrderedGraph({0}, {}, {});
  const Structure z = makeOrderedGraph({0}, {}, {{0, 0}});
  const Structure sum = oplus(x, z);
  CHECK(sum.domain == std::set<Label>{0, 1});
  CHECK(sum.rel("edge").empty());
  CHECK(sum.rel("order") == PairSet{{1, 1}});

  CHECK(oplus(Structure{}, Structure{}) == Structure{});

  const Structure doubledK2 = oplus(completeGraph(2), completeGraph(2));
  CHECK(doubledK2.domain == std::set<Label>{0, 1, 2, 3});
  CHECK(doubledK2.rel("edge") == PairSet{{0, 2}, {2, 0}, {1, 3}, {3, 1}});
}

TEST_CASE("oplus keeps the halves apart") {
  const Structure sum = oplus(pathGraph(3), completeGraph(2));
  CHECK(sum.domain == std::set<Label>{0, 1, 2, 3, 4});
  for (const auto& [u, v] : sum.rel("edge")) CHECK(u % 2 == v % 2);
  auto [plain, selfRelated] = splitParts(sum);
  CHECK(plain.domain == sum.domain);  // graphs carry no order
  CHECK(selfRelated.domain.empty());
}

TEST_CASE("oplusRooted joins the two roots") {
  const Structure x = makeOrderedGraph({0}, {}, {});
  const Structure z = makeOrderedGraph({0}, {}, {{0, 0}});
  const Structure sum = oplusRooted(x, z);
  CHECK(sum.rel("edge") == PairSet{{0, 1}, {1, 0}});
  CHECK(sum.rel("order") == PairSet{{1, 1}});

  // Chain x: root is the least vertex in the order, 1 after relabeling.
  const Structure chain = makeOrderedGraph({0, 1}, {}, {{1, 0}});
  const Structure sum2 = oplusRooted(chain, z);
  CHECK(sum2.rel("edge") == PairSet{{1, 2}, {2, 1}});
  CHECK(sum2.rel("order") == PairSet{{2, 0}, {1, 1}});
}

TEST_CASE("oplusRooted root failures") {
  const Structure goodX = makeOrderedGraph({0}, {}, {});
  const Structure goodZ = makeOrderedGraph({0}, {}, {{0, 0}});

  const Structure twoSelfRelated =
      makeOrderedGraph({0, 1}, {}, {{0, 0}, {1, 1}});
  CHECK_THROWS_WITH_AS(oplusRooted(goodX, twoSelfRelated),
                       "oplusRooted: root of z not unique", ContractError);

  const Structure noMinimum = makeOrderedGraph({0, 1}, {}, {});
  CHECK_THROWS_WITH_AS(oplusRooted(noMinimum, goodZ),
                       "oplusRooted: root of x undefined", ContractError);

  const Structure nothingSelfRelated = makeOrderedGraph({0, 1}, {}, {{0, 1}});
  CHECK_THROWS_WITH_AS(oplusRooted(goodX, nothingSelfRelated),
                       "oplusRooted: root of z undefined", ContractError);
}

TEST_CASE("enumerateG pinned small cases") {
  const auto g1 = enumerateG(1);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].images == std::vector<int>{0, 1});
  CHECK(g1[1].images == std::vector<int>{1, 0});
  CHECK(g1[0].k() == 1);

  CHECK_THROWS_AS(enumerateG(0), ContractError);
}

TEST_CASE("enumerateG counts match the binomial") {
  const std::size_t expected[] = {2, 6, 20, 70};
  for (int k = 1; k <= 4; ++k) {
    const auto perms = enumerateG(k);
    CHECK(perms.size() == expected[k - 1]);
    const ParityPerm identity{identityPerm(2 * k)};
    CHECK(std::count(perms.begin(), perms.end(), identity) == 1);
    for (const auto& g : perms) CHECK(isParityMonotone(g.images));
    // strictly ordered by evens image, so all distinct
    for (std::size_t i = 0; i + 1 < perms.size(); ++i) {
      std::vector<int> a, b;
      for (int n = 0; n < k; ++n) {
        a.push_back(perms[i].images[static_cast<std::size_t>(2 * n)]);
        b.push_back(perms[i + 1].images[static_cast<std::size_t>(2 * n)]);
      }
      CHECK(a < b);
    }
  }
}

TEST_CASE("enumerateG(2) equals the brute filter over all 24 permutations") {
  std::set<std::vector<int>> brute;
  std::vector<int> perm = identityPerm(4);
  do {
    if (isParityMonotone(perm)) brute.insert(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::vector<int>> mine;
  for (const auto& g : enumerateG(2)) mine.insert(g.images);
  CHECK(mine == brute);
}

TEST_CASE("odd image set determines the parity-monotone permutation") {
  for (int k = 1; k <= 3; ++k) {
    const auto perms = enumerateG(k);
    for (std::size_t i = 0; i < perms.size(); ++i)
      for (std::size_t j = i + 1; j < perms.size(); ++j) {
        std::set<int> oi, oj;
        for (int n = 0; n < k; ++n) {
          oi.insert(perms[i].images[static_cast<std::size_t>(2 * n + 1)]);
          oj.insert(perms[j].images[static_cast<std::size_t>(2 * n + 1)]);
        }
        CHECK(oi != oj);
      }
  }
}

TEST_CASE("decomposeParity pinned examples") {
  const auto idDec = decomposeParity(identityPerm(6));
  CHECK(idDec.g.images == identityPerm(6));
  CHECK(idDec.p == std::vector<int>{0, 1, 2});
  CHECK(idDec.q == std::vector<int>{0, 1, 2});

  const std::vector<int> h{1, 0, 3, 2};
  const auto dec = decomposeParity(h);
  CHECK(dec.g.images == h);  // already parity-monotone
  CHECK(dec.p == std::vector<int>{0, 1});
  CHECK(dec.q == std::vector<int>{0, 1});

  CHECK_THROWS_AS(decomposeParity({0, 1, 2}), ContractError);
  CHECK_THROWS_AS(decomposeParity({0, 0, 1, 1}), ContractError);
}

TEST_CASE("decomposeParity identities hold for every permutation, k <= 3") {
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> h = identityPerm(2 * k);
    do {
      const auto dec = decomposeParity(h);
      CHECK(isParityMonotone(dec.g.images));
      std::vector<bool> pSeen(static_cast<std::size_t>(k), false);
      std::vector<bool> qSeen(static_cast<std::size_t>(k), false);
      for (int n = 0; n < k; ++n) {
        CHECK(h[static_cast<std::size_t>(2 * n)] ==
              dec.g(2 * dec.p[static_cast<std::size_t>(n)]));
        CHECK(h[static_cast<std::size_t>(2 * n + 1)] ==
              dec.g(2 * dec.q[static_cast<std::size_t>(n)] + 1));
        pSeen[static_cast<std::size_t>(dec.p[static_cast<std::size_t>(n)])] = true;
        qSeen[static_cast<std::size_t>(dec.q[static_cast<std::size_t>(n)])] = true;
      }
      CHECK(std::count(pSeen.begin(), pSeen.end(), false) == 0);
      CHECK(std::count(qSeen.begin(), qSeen.end(), false) == 0);
    } while (std::next_permutation(h.begin(), h.end()));
  }
}

TEST_CASE("logicAction basics") {
  const Structure k2 = completeGraph(2);
  CHECK(logicAction(identityPerm(2), k2) == k2);
  CHECK(logicAction({1, 0}, k2) == k2);  // edge is symmetric

  const Structure chain = makeOrderedGraph({0, 1}, {}, {{0, 1}});
  const Structure moved = logicAction({1, 0}, chain);
  CHECK(moved.rel("order") == PairSet{{1, 0}});

  // labels beyond the permutation length stay put
  const Structure far = makeOrderedGraph({0, 5}, {}, {{0, 5}});
  const Structure acted = logicAction({1, 0}, far);
  CHECK(acted.domain == std::set<Label>{1, 5});
  CHECK(acted.rel("order") == PairSet{{1, 5}});

  CHECK_THROWS_AS(logicAction({1, 1}, k2), ContractError);
}

TEST_CASE("logicAction is an action") {
  const std::vector<int> g{2, 0, 3, 1};
  const std::vector<int> h{1, 3, 0, 2};
  std::vector<int> gh(4);
  for (int i = 0; i < 4; ++i)
    gh[static_cast<std::size_t>(i)] =
        g[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])];
  for (const auto& a : fourVertexGraphCorpus())
    CHECK(logicAction(gh, a) == logicAction(g, logicAction(h, a)));
}

TEST_CASE("glueEmbeddings pinned example and soundness") {
  const Structure vertex = makeOrderedGraph({0}, {}, {});
  const Structure k2 = makeOrderedGraph({0, 1}, {{0, 1}}, {});
  const Structure rz = makeOrderedGraph({0}, {}, {{0, 0}});

  MorphismWitness e1;
  e1.kind = MorphKind::Embedding;
  e1.map = {{0, 1}};
  MorphismWitness e2;
  e2.kind = MorphKind::Isomorphism;
  e2.map = {{0, 0}};

  const MorphismWitness glued = glueEmbeddings(vertex, k2, e1, rz, rz, e2);
  CHECK(glued.kind == MorphKind::Embedding);
  CHECK(glued.map == std::map<Label, Label>{{0, 2}, {1, 1}});
  CHECK(verify(oplus(vertex, rz), oplus(k2, rz), glued));
}

TEST_CASE("glue of two isomorphisms is an isomorphism") {
  const Structure a = pathGraph(3);
  MorphismWitness flip;
  flip.kind = MorphKind::Isomorphism;
  flip.map = {{0, 2}, {1, 1}, {2, 0}};
  REQUIRE(verify(a, a, flip));

  const MorphismWitness glued = glueEmbeddings(a, a, flip, a, a, flip);
  CHECK(glued.kind == MorphKind::Isomorphism);
  CHECK(verify(oplus(a, a), oplus(a, a), glued));

  MorphismWitness notEmb;
  notEmb.kind = MorphKind::Homomorphism;
  notEmb.map = flip.map;
  CHECK_THROWS_AS(glueEmbeddings(a, a, notEmb, a, a, flip), ContractError);
  MorphismWitness broken;
  broken.kind = MorphKind::Embedding;
  broken.map = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS_AS(glueEmbeddings(a, a, broken, a, a, flip), ContractError);
}

TEST_CASE("glued witnesses verify across the small corpus") {
  const Structure rz = makeOrderedGraph({0, 1}, {}, {{0, 0}, {1, 1}});
  MorphismWitness zId;
  zId.kind = MorphKind::Isomorphism;
  zId.map = {{0, 0}, {1, 1}};
  for (const auto& x : smallGraphCorpus()) {
    MorphismWitness xId;
    xId.kind = MorphKind::Isomorphism;
    for (Label v : x.domain) xId.map[v] = v;
    const MorphismWitness glued = glueEmbeddings(x, x, xId, rz, rz, zId);
    CHECK(glued.kind == MorphKind::Isomorphism);
    CHECK(verify(oplus(x, rz), oplus(x, rz), glued));
  }
}

TEST_CASE("splitParts undoes oplus") {
  const Structure x = makeOrderedGraph({0, 1, 2}, {{0, 1}}, {{0, 1}});
  const Structure z = makeOrderedGraph({0, 1}, {{0, 1}}, {{0, 0}, {1, 1}});
  const auto [irr, refl] = splitParts(oplus(x, z));
  CHECK(irr == shiftCopy(x, 2, 0));
  CHECK(refl == shiftCopy(z, 2, 1));
}

TEST_CASE("splitParts commutes with logicAction") {
  const Structure x = makeOrderedGraph({0, 1}, {}, {{0, 1}});
  const Structure z = makeOrderedGraph({0}, {}, {{0, 0}});
  const Structure sum = oplus(x, z);
  for (const auto& g : enumerateG(3)) {
    const auto [irr, refl] = splitParts(logicAction(g.images, sum));
    const auto [irr0, refl0] = splitParts(sum);
    CHECK(irr == logicAction(g.images, irr0));
    CHECK(refl == logicAction(g.images, refl0));
  }
}

TEST_CASE("splitParts degenerate inputs") {
  const Structure allRefl = makeOrderedGraph({0, 1}, {}, {{0, 0}, {1, 1}});
  const auto [none, all] = splitParts(allRefl);
  CHECK(none.domain.empty());
  CHECK(all.domain == allRefl.domain);
  CHECK(all == allRefl);

  const auto [e1, e2] = splitParts(Structure{});
  CHECK(e1 == Structure{});
  CHECK(e2 == Structure{});
}

TEST_CASE("validateKit rejects broken kits") {
  WitnessKit kit = twoClassKit();
  validateKit(kit);  // the good kit passes

  WitnessKit noClassifier = twoClassKit();
  noClassifier.classify = nullptr;
  CHECK_THROWS_AS(validateKit(noClassifier), ContractError);

  WitnessKit reflexivePrime = twoClassKit();
  reflexivePrime.familyPrime[0] = makeOrderedGraph({0}, {}, {{0, 0}});
  CHECK_THROWS_AS(validateKit(reflexivePrime), ContractError);

  WitnessKit irreflexiveSecond = twoClassKit();
  irreflexiveSecond.familySecond[0] = makeOrderedGraph({0}, {}, {});
  CHECK_THROWS_AS(validateKit(irreflexiveSecond), ContractError);

  WitnessKit outOfRange = twoClassKit();
  outOfRange.classify = [](const Structure&) { return std::size_t{7}; };
  CHECK_THROWS_AS(validateKit(outOfRange), ContractError);

  // two isomorphic members classified apart: relabeled copy of the singleton
  WitnessKit unstable = twoClassKit();
  unstable.familySecond.push_back(
      makeOrderedGraph({5}, {}, {{5, 5}}));
  unstable.classify = [](const Structure& z) {
    return z.domain.count(5) ? std::size_t{1} : std::size_t{0};
  };
  CHECK_THROWS_AS(validateKit(unstable), ContractError);

  WitnessKit badSection = twoClassKit();
  badSection.section = [](std::size_t) {
    return makeOrderedGraph({0}, {}, {{0, 0}});
  };
  CHECK_THROWS_AS(validateKit(badSection), ContractError);

  WitnessKit goodSection = twoClassKit();
  goodSection.section = [](std::size_t c) {
    return c == 0 ? makeOrderedGraph({0}, {}, {{0, 0}})
                  : makeOrderedGraph({0, 1}, {}, {{0, 0}, {1, 1}, {0, 1}});
  };
  validateKit(goodSection);
}

TEST_CASE("assembleW on a singleton kit") {
  WitnessKit kit;
  kit.familyPrime = {makeOrderedGraph({0, 1}, {}, {{0, 1}})};
  kit.familySecond = {makeOrderedGraph({0}, {}, {{0, 0}})};
  kit.classify = [](const Structure&) { return std::size_t{0}; };

  const WSpace space = assembleW(kit, 2);
  REQUIRE(space.entries.size() == 6);
  for (const auto& w : space.entries) {
    CHECK(w.x == kit.familyPrime[0]);
    CHECK(w.z == kit.familySecond[0]);
  }
  for (const auto& row : space.S)
    for (bool b : row) CHECK(b);
  for (const auto& row : space.F)
    for (bool b : row) CHECK(b);
  CHECK(space.images.size() == 6);
}

TEST_CASE("assembleW two-class kit: entries, S, F pinned") {
  const WitnessKit kit = twoClassKit();
  const WSpace space = assembleW(kit, 1);
  REQUIRE(space.entries.size() == 4);

  // sorted order puts the singleton x (smaller domain) first
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(space.entries[i].x == kit.familyPrime[0]);
    CHECK(space.entries[i].z == kit.familySecond[0]);
  }
  for (std::size_t i = 2; i < 4; ++i) {
    CHECK(space.entries[i].x == kit.familyPrime[1]);
    CHECK(space.entries[i].z == kit.familySecond[1]);
  }

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool iSmall = i < 2, jSmall = j < 2;
      CHECK(space.S[i][j] == (iSmall || !jSmall));  // vertex embeds anywhere
      CHECK(space.F[i][j] == (iSmall == jSmall));
    }
}

TEST_CASE("assembleW images: injectivity and the claimed transfers") {
  const WSpace space = assembleW(twoClassKit(), 1);
  const std::size_t n = space.entries.size();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) CHECK(space.images[i] != space.images[j]);

      const bool embeds =
          search(space.images[i], space.images[j], MorphKind::Embedding)
              .status == SearchStatus::Found;
      CHECK(space.S[i][j] == embeds);

      const bool iso =
          search(space.images[i], space.images[j], MorphKind::Isomorphism)
              .status == SearchStatus::Found;
      CHECK(space.F[i][j] == iso);
    }
}

TEST_CASE("embeddings between images respect the two parts") {
  const WSpace space = assembleW(twoClassKit(), 1);
  for (std::size_t i = 0; i < space.entries.size(); ++i)
    for (std::size_t j = 0; j < space.entries.size(); ++j) {
      const auto out =
          search(space.images[i], space.images[j], MorphKind::Embedding);
      if (out.status != SearchStatus::Found) continue;
      const auto [fromIrr, fromRefl] = splitParts(space.images[i]);
      const auto [toIrr, toRefl] = splitParts(space.images[j]);
      for (const auto& [u, v] : out.witness->map) {
        if (fromIrr.domain.count(u)) CHECK(toIrr.domain.count(v) == 1);
        if (fromRefl.domain.count(u)) CHECK(toRefl.domain.count(v) == 1);
      }
    }
}

TEST_CASE("assembleW deduplicates value-identical entries") {
  WitnessKit kit = twoClassKit();
  kit.familySecond.push_back(kit.familySecond[0]);  // literal duplicate
  const WSpace space = assembleW(kit, 1);
  CHECK(space.entries.size() == 4);
}

TEST_CASE("assembleW n-classes variant") {
  WitnessKit kit = twoClassKit();
  // a third class: three-vertex reflexive chain, classified with index 1
  kit.familySecond.push_back(makeOrderedGraph(
      {0, 1, 2}, {},
      {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}));
  const WSpace full = assembleW(kit, 1);
  CHECK(full.entries.size() == 6);

  // named class: the singleton; residual: both larger z's, paired with x1
  std::vector<ClassRep> reps{{kit.familyPrime[0], kit.familySecond[0]},
                             {kit.familyPrime[1], kit.familySecond[1]}};
  const WSpace space = assembleW(kit, 1, reps);
  REQUIRE(space.entries.size() == 6);
  for (const auto& w : space.entries) {
    const bool singleton = w.z.domain.size() == 1;
    CHECK(w.x == kit.familyPrime[singleton ? 0 : 1]);
  }

  // the third class went to the residual target even though classify agrees
  // here; move the rep order to see the residual rule matter
  std::vector<ClassRep> flipped{{kit.familyPrime[1], kit.familySecond[1]},
                                {kit.familyPrime[0], kit.familySecond[0]}};
  const WSpace flippedSpace = assembleW(kit, 1, flipped);
  for (const auto& w : flippedSpace.entries) {
    const bool named = search(w.z, kit.familySecond[1], MorphKind::Isomorphism)
                           .status == SearchStatus::Found;
    CHECK(w.x == kit.familyPrime[named ? 1 : 0]);
  }

  std::vector<ClassRep> isoReps{{kit.familyPrime[0], kit.familySecond[0]},
                                {kit.familyPrime[0], kit.familySecond[0]}};
  CHECK_THROWS_AS(assembleW(kit, 1, isoReps), ContractError);
  CHECK_THROWS_AS(assembleW(kit, 1, std::vector<ClassRep>{}), ContractError);
}
