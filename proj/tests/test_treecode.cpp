#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "isoforge/corpus.hpp"
#include "isoforge/error.hpp"
#include "isoforge/morphism.hpp"
#include "isoforge/treecode.hpp"

using namespace isoforge;

namespace {

const Structure kOneVertex = edgelessGraph(1);
const Structure kEdge = completeGraph(2);

// Independent restatement of both terminal rules, used to audit builders.
int expectedTerminals(CodeKind kind, const Structure& x, const Seq& s) {
  if (kind == CodeKind::T) {
    if (s.size() % 2 == 0) return 1;
    const auto rp = relevantPair(evenSubsequence(s));
    return x.rel("edge").count({static_cast<Label>(rp.first),
                                static_cast<Label>(rp.second)})
               ? 1
               : 0;
  }
  if (s.empty()) return 0;
  if (std::count(s.begin(), s.end(), Nat{0}) > 0) return 2;
  const auto rp = relevantPair(s);
  return x.rel("edge").count({static_cast<Label>(rp.first) - 1,
                              static_cast<Label>(rp.second) - 1})
             ? 1
             : 0;
}

void auditTerminalRule(CodeKind kind, const Structure& x, const TreeCode& code) {
  std::map<Seq, int> seen;
  std::set<Seq> sequences;
  for (const auto& [label, node] : code.provenance) {
    if (node.kind == TreeNode::Kind::Sequence)
      sequences.insert(node.seq);
    else
      seen[node.seq]++;
  }
  for (const Seq& s : sequences)
    CHECK(seen[s] == expectedTerminals(kind, x, s));
  for (const auto& [s, count] : seen) CHECK(sequences.count(s) == 1);
}

std::vector<Structure> paddedSmallCorpus() {
  std::vector<Structure> out;
  for (const auto& g : smallGraphCorpus()) out.push_back(padToDomain(g, {0, 1, 2}));
  return out;
}

}  // namespace

TEST_CASE("buildT one-vertex graph at (2,1): pinned 5-node code") {
  const TreeCode code = buildT(kOneVertex, {2, 1});
  REQUIRE(code.structure.domain.size() == 5);

  CHECK(code.labelOf(TreeNode::sequence({})) == 0);
  CHECK(code.labelOf(TreeNode::sequence({0})) == 1);
  CHECK(code.labelOf(TreeNode::sequence({0, 0})) == 2);
  CHECK(code.labelOf(TreeNode::terminal({}, 0)) == 3);
  CHECK(code.labelOf(TreeNode::terminal({0, 0}, 0)) == 4);
  CHECK_FALSE(code.hasNode(TreeNode::terminal({0}, 0)));

  const PairSet tree{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}};
  CHECK(code.structure.rel("tree") == tree);

  // order classes: {terminals}, {empty}, {<0>, <0,0>}
  const PairSet order{{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2},
                      {3, 3}, {3, 4}, {4, 3}, {4, 4}};
  CHECK(code.structure.rel("order") == order);

  CHECK(validate(code.structure, StructureClass::OrderedSetTree).empty());
}

TEST_CASE("buildT accepts the empty graph") {
  const TreeCode code = buildT(edgelessGraph(0), {1, 1});
  CHECK(code.structure.domain.size() == 3);  // <>, <0>, terminal of <>
  CHECK_FALSE(code.hasNode(TreeNode::terminal({0}, 0)));
}

TEST_CASE("buildT input contract") {
  CHECK_THROWS_AS(buildT(completeGraph(3), {2, 2}), ContractError);
  CHECK_THROWS_AS(buildT(makeGraph({1, 2}, {{1, 2}}), {2, 2}), ContractError);
  CHECK_THROWS_AS(buildT(kOneVertex, {0, 1}), ContractError);
  Structure notAGraph = edgelessGraph(2);
  notAGraph.relations["edge"].insert({0, 1});
  CHECK_THROWS_AS(buildT(notAGraph, {2, 2}), ContractError);
}

TEST_CASE("buildR one-vertex graph at (2,2): pinned 15-node code") {
  const TreeCode code = buildR(kOneVertex, {2, 2});
  CHECK(code.structure.domain.size() == 15);

  for (const Seq& s : {Seq{0}, Seq{0, 0}, Seq{0, 1}, Seq{1, 0}}) {
    CHECK(code.hasNode(TreeNode::terminal(s, 0)));
    CHECK(code.hasNode(TreeNode::terminal(s, 1)));
  }
  for (const Seq& s : {Seq{}, Seq{1}, Seq{1, 1}}) {
    CHECK_FALSE(code.hasNode(TreeNode::terminal(s, 0)));
    CHECK_FALSE(code.hasNode(TreeNode::terminal(s, 1)));
  }
  CHECK(validate(code.structure, StructureClass::OrderedSetTree).empty());
}

TEST_CASE("buildR single-terminal placement tracks edges") {
  const TreeCode shallow = buildR(kEdge, {1, 3});
  CHECK(shallow.structure.domain.size() == 6);
  CHECK_FALSE(shallow.hasNode(TreeNode::terminal({1}, 0)));
  CHECK_FALSE(shallow.hasNode(TreeNode::terminal({2}, 0)));

  const TreeCode deep = buildR(kEdge, {2, 3});
  CHECK(deep.hasNode(TreeNode::terminal({1, 2}, 0)));
  CHECK(deep.hasNode(TreeNode::terminal({2, 1}, 0)));
  CHECK_FALSE(deep.hasNode(TreeNode::terminal({1, 2}, 1)));
  CHECK_FALSE(deep.hasNode(TreeNode::terminal({1, 1}, 0)));
  CHECK_FALSE(deep.hasNode(TreeNode::terminal({2, 2}, 0)));
}

TEST_CASE("terminal rule audit across the padded corpus") {
  for (const auto& x : paddedSmallCorpus()) {
    auditTerminalRule(CodeKind::T, x, buildT(x, {3, 3}));
    auditTerminalRule(CodeKind::R, x, buildR(x, {2, 4}));
  }
}

TEST_CASE("node-count formulas over the padded corpus") {
  for (const auto& x : paddedSmallCorpus()) {
    const std::size_t orderedEdges = x.rel("edge").size();
    CHECK(buildT(x, {4, 3}).structure.domain.size() == 212 + 3 * orderedEdges);
    CHECK(buildR(x, {2, 4}).structure.domain.size() == 37 + orderedEdges);
  }
}

TEST_CASE("E-classes: terminals together, root alone, sequences by pair") {
  for (const auto& x : {padToDomain(kOneVertex, {0, 1}), kEdge}) {
    const TreeCode code = buildT(x, {3, 2});
    PairSet expected;
    std::vector<Label> terms;
    std::map<std::pair<Nat, Nat>, std::vector<Label>> fibers;
    for (const auto& [label, node] : code.provenance) {
      if (node.kind == TreeNode::Kind::Terminal)
        terms.push_back(label);
      else if (node.seq.empty())
        expected.insert({label, label});
      else
        fibers[relevantPair(evenSubsequence(node.seq))].push_back(label);
    }
    for (Label u : terms)
      for (Label v : terms) expected.insert({u, v});
    for (const auto& [rp, members] : fibers)
      for (Label u : members)
        for (Label v : members) expected.insert({u, v});
    CHECK(code.structure.rel("order") == expected);
  }
}

TEST_CASE("the equivalence on sequence nodes does not depend on the graph") {
  const auto corpus = paddedSmallCorpus();
  const TreeCode base = buildT(corpus.front(), {3, 3});
  auto seqPart = [](const TreeCode& c) {
    PairSet out;
    for (const auto& [u, v] : c.structure.rel("order"))
      if (c.provenance.at(u).kind == TreeNode::Kind::Sequence &&
          c.provenance.at(v).kind == TreeNode::Kind::Sequence)
        out.insert({u, v});
    return out;
  };
  const PairSet basePart = seqPart(base);
  for (const auto& x : corpus) CHECK(seqPart(buildT(x, {3, 3})) == basePart);
}

TEST_CASE("even fragment is the same for every graph") {
  const Structure a = padToDomain(kOneVertex, {0, 1, 2});
  const Structure b = padToDomain(kEdge, {0, 1, 2});
  const TreeCode ca = buildT(a, {2, 3});
  const TreeCode cb = buildT(b, {2, 3});

  auto evenNodes = [](const TreeCode& c) {
    std::vector<TreeNode> out;
    for (const auto& [label, node] : c.provenance)
      if (node.seq.size() % 2 == 0) out.push_back(node);
    return out;
  };
  const auto nodesA = evenNodes(ca);
  const auto nodesB = evenNodes(cb);
  REQUIRE(nodesA.size() == nodesB.size());
  for (std::size_t i = 0; i < nodesA.size(); ++i) CHECK(nodesA[i] == nodesB[i]);

  for (const auto& u : nodesA)
    for (const auto& v : nodesA)
      for (const char* relName : {"tree", "order"}) {
        const bool inA =
            ca.structure.related(relName, ca.labelOf(u), ca.labelOf(v));
        const bool inB =
            cb.structure.related(relName, cb.labelOf(u), cb.labelOf(v));
        CHECK(inA == inB);
      }
}

TEST_CASE("truncation monotonicity") {
  const Structure x = padToDomain(kEdge, {0, 1, 2});
  const TreeCode small = buildT(x, {2, 3});
  const TreeCode big = buildT(x, {3, 3});

  // Same node set when the deeper code is cut at the shallower depth.
  std::set<TreeNode> cut;
  for (const auto& [label, node] : big.provenance)
    if (node.seq.size() <= 2) cut.insert(node);
  std::set<TreeNode> own;
  for (const auto& [label, node] : small.provenance) own.insert(node);
  CHECK(cut == own);

  for (const auto& u : own)
    for (const auto& v : own)
      for (const char* relName : {"tree", "order"}) {
        const bool inSmall =
            small.structure.related(relName, small.labelOf(u), small.labelOf(v));
        const bool inBig =
            big.structure.related(relName, big.labelOf(u), big.labelOf(v));
        CHECK(inSmall == inBig);
      }
}

TEST_CASE("liftIso on the identity is the identity") {
  MorphismWitness id;
  id.kind = MorphKind::Isomorphism;
  id.map = {{0, 0}, {1, 1}};
  for (CodeKind kind : {CodeKind::T, CodeKind::R}) {
    const TruncSpec spec{2, kind == CodeKind::T ? 2 : 3};
    const auto tau = liftIso(kind, kEdge, kEdge, id, spec);
    for (const auto& [u, v] : tau.map) CHECK(u == v);
  }
}

TEST_CASE("liftIso of the swap is a verified code isomorphism") {
  MorphismWitness swap;
  swap.kind = MorphKind::Isomorphism;
  swap.map = {{0, 1}, {1, 0}};

  const TreeCode ct = buildT(kEdge, {2, 2});
  const auto tauT = liftIso(CodeKind::T, kEdge, kEdge, swap, {2, 2});
  CHECK(tauT.map.at(ct.labelOf(TreeNode::sequence({0, 1}))) ==
        ct.labelOf(TreeNode::sequence({1, 0})));
  CHECK(verify(ct.structure, ct.structure, tauT));

  const TreeCode cr = buildR(kEdge, {2, 3});
  const auto tauR = liftIso(CodeKind::R, kEdge, kEdge, swap, {2, 3});
  CHECK(tauR.map.at(cr.labelOf(TreeNode::sequence({1, 2}))) ==
        cr.labelOf(TreeNode::sequence({2, 1})));
  CHECK(tauR.map.at(cr.labelOf(TreeNode::sequence({0}))) ==
        cr.labelOf(TreeNode::sequence({0})));
  CHECK(verify(cr.structure, cr.structure, tauR));
}

TEST_CASE("liftIso between different graphs verifies") {
  const Structure a = makeGraph({0, 1, 2}, {{0, 1}});
  const Structure b = makeGraph({0, 1, 2}, {{1, 2}});
  MorphismWitness sigma;
  sigma.kind = MorphKind::Isomorphism;
  sigma.map = {{0, 1}, {1, 2}, {2, 0}};
  REQUIRE(verify(a, b, sigma));

  const auto tau = liftIso(CodeKind::T, a, b, sigma, {3, 3});
  CHECK(verify(buildT(a, {3, 3}).structure, buildT(b, {3, 3}).structure, tau));

  const auto rho = liftIso(CodeKind::R, a, b, sigma, {2, 4});
  CHECK(verify(buildR(a, {2, 4}).structure, buildR(b, {2, 4}).structure, rho));
}

TEST_CASE("liftIso rejects a bad sigma") {
  MorphismWitness bogus;
  bogus.kind = MorphKind::Isomorphism;
  bogus.map = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(liftIso(CodeKind::T, kEdge, kEdge, bogus, {2, 2}),
                  ContractError);
}

TEST_CASE("universal embedding: pinned depth-1 and depth-2 images") {
  const TreeCode src = buildT(padToDomain(kEdge, {0, 1, 2}), {2, 3});
  const UniversalEmbedding ue = universalImageMap(src);
  CHECK(ue.targetSpec == TruncSpec{6, 3});

  CHECK(ue.nodeMap.at(TreeNode::sequence({})) == TreeNode::sequence({}));
  CHECK(ue.nodeMap.at(TreeNode::sequence({0})) ==
        TreeNode::sequence({0, 0, 0, 0}));
  CHECK(ue.nodeMap.at(TreeNode::sequence({2})) ==
        TreeNode::sequence({2, 0, 2, 0}));
  CHECK(ue.nodeMap.at(TreeNode::sequence({0, 1})) ==
        TreeNode::sequence({0, 0, 0, 0, 1, 0}));
  CHECK(ue.nodeMap.at(TreeNode::terminal({0, 1}, 0)) ==
        TreeNode::terminal({0, 0, 0, 0, 1, 0}, 0));

  // Sibling images diverge at their first added coordinate.
  const Seq i0 = ue.nodeMap.at(TreeNode::sequence({0})).seq;
  const Seq i1 = ue.nodeMap.at(TreeNode::sequence({1})).seq;
  CHECK(i0[0] != i1[0]);
}

TEST_CASE("universal embedding verifies into every target") {
  const std::vector<Structure> graphs{kOneVertex, kEdge, edgelessGraph(2)};
  for (const auto& x : graphs)
    for (const auto& y : graphs) {
      const auto res = embedUniversalT(x, y, {2, 2});
      CHECK(res.witness.kind == MorphKind::Embedding);
      CHECK(verify(res.source.structure, res.target.structure, res.witness));
    }
}

TEST_CASE("weakEpiR identity is the identity") {
  MorphismWitness id;
  id.kind = MorphKind::Embedding;
  id.map = {{0, 0}};
  const auto res = weakEpiR(kOneVertex, kOneVertex, id, {2, 2});
  CHECK(res.witness.map.size() == 15);
  for (const auto& [u, v] : res.witness.map) CHECK(u == v);
  CHECK(verify(res.from.structure, res.to.structure, res.witness));
}

TEST_CASE("weakEpiR collapses letters outside the embedded image") {
  MorphismWitness f;
  f.kind = MorphKind::Embedding;
  f.map = {{0, 0}};
  const auto res = weakEpiR(kOneVertex, kEdge, f, {2, 2});
  // y-side alphabet is 3; the unmatched vertex letter 2 collapses to 0.
  CHECK(res.from.spec == TruncSpec{2, 3});
  CHECK(res.witness.map.at(res.from.labelOf(TreeNode::sequence({2}))) ==
        res.to.labelOf(TreeNode::sequence({0})));
  CHECK(res.witness.map.at(res.from.labelOf(TreeNode::sequence({1}))) ==
        res.to.labelOf(TreeNode::sequence({1})));
  CHECK(verify(res.from.structure, res.to.structure, res.witness));
}

TEST_CASE("weakEpiR admits same-length preimages for every target sequence") {
  MorphismWitness f;
  f.kind = MorphKind::Embedding;
  f.map = {{0, 1}, {1, 2}};  // edge 0-1 into path 1-2 inside P3
  REQUIRE(verify(kEdge, pathGraph(3), f));
  const auto res = weakEpiR(kEdge, pathGraph(3), f, {2, 3});
  CHECK(verify(res.from.structure, res.to.structure, res.witness));

  for (const auto& [label, node] : res.to.provenance) {
    if (node.kind != TreeNode::Kind::Sequence) continue;
    Seq lifted;
    for (Nat a : node.seq)
      lifted.push_back(a == 0 ? 0
                              : static_cast<Nat>(f.map.at(
                                    static_cast<Label>(a) - 1)) + 1);
    CHECK(res.witness.map.at(res.from.labelOf(TreeNode::sequence(lifted))) ==
          label);
  }
}

TEST_CASE("weakEpiR contracts") {
  MorphismWitness f;
  f.kind = MorphKind::Embedding;
  f.map = {{0, 0}};
  CHECK_THROWS_AS(weakEpiR(kOneVertex, kOneVertex, f, {2, 3}), ContractError);
  MorphismWitness notEmb;
  notEmb.kind = MorphKind::Embedding;
  notEmb.map = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(weakEpiR(kEdge, kEdge, notEmb, {2, 3}), ContractError);
}

TEST_CASE("extractIsoT recovers the lifted permutation") {
  MorphismWitness id;
  id.kind = MorphKind::Isomorphism;
  id.map = {{0, 0}, {1, 1}};
  const TreeCode code = buildT(kEdge, {2, 2});
  const auto tauId = liftIso(CodeKind::T, kEdge, kEdge, id, {2, 2});
  const auto sigmaId = extractIsoT(code, code, tauId);
  CHECK(sigmaId.map == std::map<Label, Label>{{0, 0}, {1, 1}});

  MorphismWitness swap;
  swap.kind = MorphKind::Isomorphism;
  swap.map = {{0, 1}, {1, 0}};
  const auto tauSwap = liftIso(CodeKind::T, kEdge, kEdge, swap, {2, 2});
  const auto sigmaSwap = extractIsoT(code, code, tauSwap);
  CHECK(sigmaSwap.map == std::map<Label, Label>{{0, 1}, {1, 0}});
  CHECK(verify(kEdge, kEdge, sigmaSwap));

  MorphismWitness bogus;
  bogus.kind = MorphKind::Isomorphism;
  for (Label v : code.structure.domain) bogus.map[v] = v;
  bogus.map[0] = 1;
  bogus.map[1] = 0;
  CHECK_THROWS_AS(extractIsoT(code, code, bogus), ContractError);
}

TEST_CASE("tree-code save/load round-trip") {
  for (const TreeCode& code :
       {buildT(kEdge, {2, 2}), buildR(kOneVertex, {2, 2})}) {
    const std::string doc = saveTreeCode(code);
    const TreeCode back = loadTreeCode(doc);
    CHECK(back.kind == code.kind);
    CHECK(back.spec == code.spec);
    CHECK(back.structure == code.structure);
    CHECK(back.provenance == code.provenance);
    CHECK(saveTreeCode(back) == doc);
  }
  CHECK_THROWS_AS(loadTreeCode("{}"), ParseError);
}
