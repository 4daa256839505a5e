#include "isoforge/treecode.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "isoforge/error.hpp"

namespace isoforge {

namespace {

using nlohmann::json;

std::string seqText(const Seq& s) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ",";
    os << s[i];
  }
  os << ">";
  return os.str();
}

void checkSpec(TruncSpec spec) {
  if (spec.maxLen < 1 || spec.alphabet < 1)
    throw ContractError("TruncSpec: need maxLen >= 1 and alphabet >= 1");
}

// Valid graph on an initial segment, at most maxVerts vertices.
int checkGraphInput(const Structure& x, int maxVerts, const std::string& who) {
  const auto diags = validate(x, StructureClass::Graph);
  if (!diags.empty())
    throw ContractError(who + ": input is not a valid graph: " + diags.front());
  int expect = 0;
  for (Label v : x.domain)
    if (v != expect++)
      throw ContractError(who + ": domain must be {0..n-1}, found label " +
                          std::to_string(v));
  if (expect > maxVerts)
    throw ContractError(who + ": graph with " + std::to_string(expect) +
                        " vertices exceeds the spec alphabet");
  return expect;
}

// All sequences over {0..alphabet-1} of length <= maxLen, in (length, lex)
// order.
std::vector<Seq> enumerateSequences(TruncSpec spec) {
  std::vector<Seq> out{Seq{}};
  std::vector<Seq> level{Seq{}};
  for (int len = 1; len <= spec.maxLen; ++len) {
    std::vector<Seq> next;
    next.reserve(level.size() * static_cast<std::size_t>(spec.alphabet));
    for (const Seq& s : level)
      for (Nat a = 0; a < static_cast<Nat>(spec.alphabet); ++a) {
        Seq t = s;
        t.push_back(a);
        next.push_back(std::move(t));
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

// Terminal slots the coding rule attaches to s; empty when none.
std::vector<int> terminalSlots(CodeKind kind, const Structure& x, const Seq& s) {
  if (kind == CodeKind::T) {
    if (s.size() % 2 == 0) return {0};
    const auto [a, b] = relevantPair(evenSubsequence(s));
    if (x.related("edge", static_cast<Label>(a), static_cast<Label>(b)))
      return {0};
    return {};
  }
  if (s.empty()) return {};
  if (std::find(s.begin(), s.end(), Nat{0}) != s.end()) return {0, 1};
  const auto [a, b] = relevantPair(s);
  if (x.related("edge", static_cast<Label>(a) - 1, static_cast<Label>(b) - 1))
    return {0};
  return {};
}

struct ClassKey {
  int tag;  // 0 = empty sequence, 1 = terminals, 2 = nonempty sequence
  std::pair<Nat, Nat> rp{0, 0};

  bool operator<(const ClassKey& o) const {
    if (tag != o.tag) return tag < o.tag;
    return rp < o.rp;
  }
};

ClassKey classKeyOf(const TreeNode& node) {
  if (node.kind == TreeNode::Kind::Terminal) return {1, {0, 0}};
  if (node.seq.empty()) return {0, {0, 0}};
  return {2, relevantPair(evenSubsequence(node.seq))};
}

TreeCode assemble(CodeKind kind, const Structure& x, TruncSpec spec) {
  const std::vector<Seq> seqs = enumerateSequences(spec);

  TreeCode code;
  code.kind = kind;
  code.spec = spec;

  std::map<Seq, Label> seqLabel;
  Label next = 0;
  for (const Seq& s : seqs) {
    const TreeNode node = TreeNode::sequence(s);
    seqLabel[s] = next;
    code.provenance[next] = node;
    code.labels[node] = next;
    ++next;
  }
  for (const Seq& s : seqs)
    for (int slot : terminalSlots(kind, x, s)) {
      const TreeNode node = TreeNode::terminal(s, slot);
      code.provenance[next] = node;
      code.labels[node] = next;
      ++next;
    }

  Structure& st = code.structure;
  for (Label v = 0; v < next; ++v) st.domain.insert(v);

  // tree: every proper prefix below a sequence; every prefix, the parent
  // included, below a terminal.
  std::vector<LabelPair> tree;
  for (const auto& [label, node] : code.provenance) {
    const bool isTerm = node.kind == TreeNode::Kind::Terminal;
    if (!isTerm && node.seq.empty()) continue;
    Seq p;
    tree.push_back({seqLabel.at(p), label});
    const std::size_t upto = node.seq.size() - (isTerm ? 0 : 1);
    for (std::size_t i = 0; i < upto; ++i) {
      p.push_back(node.seq[i]);
      tree.push_back({seqLabel.at(p), label});
    }
  }
  std::sort(tree.begin(), tree.end());
  st.relations["tree"] = PairSet(tree.begin(), tree.end());

  std::map<ClassKey, std::vector<Label>> classes;
  for (const auto& [label, node] : code.provenance)
    classes[classKeyOf(node)].push_back(label);
  std::vector<LabelPair> order;
  std::size_t total = 0;
  for (const auto& [key, members] : classes) total += members.size() * members.size();
  order.reserve(total);
  for (const auto& [key, members] : classes)
    for (Label u : members)
      for (Label v : members) order.push_back({u, v});
  std::sort(order.begin(), order.end());
  st.relations["order"] = PairSet(order.begin(), order.end());

  st.kindHint = StructureClass::OrderedSetTree;
  return code;
}

// Entrywise letter action; used by both lift directions.
Seq mapSeq(const Seq& s, const std::function<Nat(Nat)>& letter) {
  Seq out;
  out.reserve(s.size());
  for (Nat a : s) out.push_back(letter(a));
  return out;
}

}  // namespace

TreeNode TreeNode::sequence(Seq s) {
  TreeNode n;
  n.kind = Kind::Sequence;
  n.seq = std::move(s);
  n.slot = 0;
  return n;
}

TreeNode TreeNode::terminal(Seq parent, int slot) {
  TreeNode n;
  n.kind = Kind::Terminal;
  n.seq = std::move(parent);
  n.slot = slot;
  return n;
}

bool TreeNode::operator<(const TreeNode& o) const {
  if (kind != o.kind) return kind == Kind::Sequence;
  if (seq.size() != o.seq.size()) return seq.size() < o.seq.size();
  if (seq != o.seq) return seq < o.seq;
  return slot < o.slot;
}

Label TreeCode::labelOf(const TreeNode& node) const {
  auto it = labels.find(node);
  if (it == labels.end())
    throw ContractError("TreeCode: no such node " + seqText(node.seq) +
                        (node.kind == TreeNode::Kind::Terminal
                             ? " terminal slot " + std::to_string(node.slot)
                             : ""));
  return it->second;
}

bool TreeCode::hasNode(const TreeNode& node) const {
  return labels.count(node) != 0;
}

TreeCode buildT(const Structure& x, TruncSpec spec) {
  checkSpec(spec);
  checkGraphInput(x, spec.alphabet, "buildT");
  return assemble(CodeKind::T, x, spec);
}

TreeCode buildR(const Structure& x, TruncSpec spec) {
  checkSpec(spec);
  checkGraphInput(x, spec.alphabet - 1, "buildR");
  return assemble(CodeKind::R, x, spec);
}

MorphismWitness liftIso(CodeKind kind, const Structure& x, const Structure& y,
                        const MorphismWitness& sigma, TruncSpec spec) {
  if (sigma.kind != MorphKind::Isomorphism || !verify(x, y, sigma))
    throw ContractError("liftIso: sigma is not a graph isomorphism");

  const std::function<Nat(Nat)> letter =
      kind == CodeKind::T
          ? std::function<Nat(Nat)>([&sigma](Nat a) {
              auto it = sigma.map.find(static_cast<Label>(a));
              return it == sigma.map.end() ? a : static_cast<Nat>(it->second);
            })
          : std::function<Nat(Nat)>([&sigma](Nat a) {
              if (a == 0) return Nat{0};
              auto it = sigma.map.find(static_cast<Label>(a) - 1);
              return it == sigma.map.end() ? a : static_cast<Nat>(it->second) + 1;
            });

  const TreeCode ca = kind == CodeKind::T ? buildT(x, spec) : buildR(x, spec);
  const TreeCode cb = kind == CodeKind::T ? buildT(y, spec) : buildR(y, spec);

  MorphismWitness out;
  out.kind = MorphKind::Isomorphism;
  for (const auto& [label, node] : ca.provenance) {
    TreeNode image = node;
    image.seq = mapSeq(node.seq, letter);
    out.map[label] = cb.labelOf(image);
  }
  return out;
}

UniversalEmbedding universalImageMap(const TreeCode& source) {
  if (source.kind != CodeKind::T)
    throw ContractError("universalImageMap: source must be a T-code");

  UniversalEmbedding ue;
  std::map<Seq, Seq> img;
  std::size_t maxImageLen = 1;

  for (const auto& [label, node] : source.provenance) {
    if (node.kind != TreeNode::Kind::Sequence) continue;
    const Seq& s = node.seq;
    if (s.empty()) {
      img[s] = {};
      continue;
    }
    Seq parent(s.begin(), s.end() - 1);
    const Seq& base = img.at(parent);
    Seq t = base;
    t.push_back(s.back());
    const auto [aStar, bStar] = relevantPair(evenSubsequence(s));

    const std::size_t lMin = std::max(s.size() + 1, base.size() / 2 + 1);
    bool placed = false;
    for (std::size_t L = lMin; L < lMin + 1000000; ++L) {
      const auto [n, m] = unpairIndex(static_cast<Nat>(L) - 1);
      const std::size_t p1 = 2 * static_cast<std::size_t>(n);
      const std::size_t p2 = 2 * static_cast<std::size_t>(m);
      if (n == m && aStar != bStar) continue;
      if (p1 < t.size() && t[p1] != aStar) continue;
      if (p2 < t.size() && t[p2] != bStar) continue;
      Seq v = t;
      v.resize(2 * L, 0);
      v[p1] = aStar;
      v[p2] = bStar;
      maxImageLen = std::max(maxImageLen, v.size());
      img[s] = std::move(v);
      placed = true;
      break;
    }
    if (!placed)
      throw ContractError("universalImageMap: no feasible extension for " +
                          seqText(s));
  }

  for (const auto& [label, node] : source.provenance) {
    TreeNode image;
    if (node.kind == TreeNode::Kind::Sequence) {
      image = TreeNode::sequence(img.at(node.seq));
    } else {
      if (node.slot != 0)
        throw ContractError("universalImageMap: unexpected slot-1 terminal");
      image = TreeNode::terminal(img.at(node.seq), 0);
    }
    ue.nodeMap[node] = image;
  }
  ue.targetSpec.maxLen = static_cast<int>(maxImageLen);
  ue.targetSpec.alphabet = source.spec.alphabet;
  return ue;
}

MorphismWitness bindUniversalEmbedding(const UniversalEmbedding& ue,
                                       const TreeCode& source,
                                       const TreeCode& target) {
  MorphismWitness out;
  out.kind = MorphKind::Embedding;
  for (const auto& [node, image] : ue.nodeMap)
    out.map[source.labelOf(node)] = target.labelOf(image);
  return out;
}

EmbedUniversalResult embedUniversalT(const Structure& x, const Structure& y,
                                     TruncSpec spec) {
  EmbedUniversalResult res;
  res.source = buildT(x, spec);
  const UniversalEmbedding ue = universalImageMap(res.source);
  res.targetSpec = ue.targetSpec;
  res.target = buildT(y, ue.targetSpec);
  res.witness = bindUniversalEmbedding(ue, res.source, res.target);
  return res;
}

WeakEpiResult weakEpiR(const Structure& x, const Structure& y,
                       const MorphismWitness& f, TruncSpec spec) {
  if (f.kind != MorphKind::Embedding || !verify(x, y, f))
    throw ContractError("weakEpiR: f is not a graph embedding");
  const int nx = static_cast<int>(x.domain.size());
  const int ny = static_cast<int>(y.domain.size());
  if (spec.alphabet != nx + 1)
    throw ContractError(
        "weakEpiR: spec alphabet must be one more than the target vertex "
        "count, got " +
        std::to_string(spec.alphabet));

  WeakEpiResult res;
  res.to = buildR(x, spec);
  res.from = buildR(y, TruncSpec{spec.maxLen, ny + 1});

  // Letter collapse: wildcard stays, image letters pull back through f,
  // everything else collapses to the wildcard.
  std::vector<Nat> g(static_cast<std::size_t>(ny) + 1, 0);
  for (const auto& [m, n] : f.map) g[static_cast<std::size_t>(n) + 1] =
      static_cast<Nat>(m) + 1;

  MorphismWitness h;
  h.kind = MorphKind::WeakEpimorphism;
  for (const auto& [label, node] : res.from.provenance) {
    TreeNode image = node;
    image.seq = mapSeq(node.seq, [&g](Nat a) { return g.at(a); });
    h.map[label] = res.to.labelOf(image);
  }
  res.witness = std::move(h);
  return res;
}

MorphismWitness extractIsoT(const TreeCode& a, const TreeCode& b,
                            const MorphismWitness& tau) {
  if (a.kind != CodeKind::T || b.kind != CodeKind::T)
    throw ContractError("extractIsoT: both codes must be T-codes");
  if (tau.kind != MorphKind::Isomorphism ||
      !verify(a.structure, b.structure, tau))
    throw ContractError("extractIsoT: tau is not a code isomorphism");

  MorphismWitness sigma;
  sigma.kind = MorphKind::Isomorphism;
  for (Nat n = 0; n < static_cast<Nat>(a.spec.alphabet); ++n) {
    const Label la = a.labelOf(TreeNode::sequence({n}));
    const Label lb = tau.map.at(la);
    const TreeNode& image = b.provenance.at(lb);
    if (image.kind != TreeNode::Kind::Sequence || image.seq.size() != 1)
      throw ContractError("extractIsoT: image of " + seqText({n}) +
                          " is not a depth-1 sequence");
    sigma.map[static_cast<Label>(n)] = static_cast<Label>(image.seq[0]);
  }
  return sigma;
}

std::string saveTreeCode(const TreeCode& code) {
  json doc;
  doc["kind"] = code.kind == CodeKind::T ? "T" : "R";
  doc["spec"] = {{"maxLen", code.spec.maxLen}, {"alphabet", code.spec.alphabet}};
  doc["structure"] = json::parse(saveStructure(code.structure));
  json prov = json::object();
  for (const auto& [label, node] : code.provenance) {
    json arr = json::array();
    for (Nat a : node.seq) arr.push_back(a);
    if (node.kind == TreeNode::Kind::Sequence) {
      prov[std::to_string(label)] = {{"seq", arr}};
    } else {
      arr.push_back(node.slot);
      prov[std::to_string(label)] = {{"term", arr}};
    }
  }
  doc["provenance"] = std::move(prov);
  return doc.dump(2) + "\n";
}

TreeCode loadTreeCode(const std::string& bytes) {
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("parse error at byte ") +
                     std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("spec") ||
      !doc.contains("structure") || !doc.contains("provenance"))
    throw ParseError("tree-code document needs kind/spec/structure/provenance");

  TreeCode code;
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "T")
    code.kind = CodeKind::T;
  else if (kind == "R")
    code.kind = CodeKind::R;
  else
    throw ParseError("tree-code kind must be T or R");
  code.spec.maxLen = doc["spec"].at("maxLen").get<int>();
  code.spec.alphabet = doc["spec"].at("alphabet").get<int>();
  checkSpec(code.spec);
  code.structure = loadStructure(doc["structure"].dump());

  for (const auto& [key, val] : doc["provenance"].items()) {
    const Label label = static_cast<Label>(std::stoll(key));
    if (!code.structure.domain.count(label))
      throw ParseError("provenance label " + key + " not in structure domain");
    TreeNode node;
    if (val.contains("seq")) {
      node.kind = TreeNode::Kind::Sequence;
      for (const auto& a : val["seq"]) node.seq.push_back(a.get<Nat>());
    } else if (val.contains("term")) {
      node.kind = TreeNode::Kind::Terminal;
      const auto& arr = val["term"];
      if (!arr.is_array() || arr.empty())
        throw ParseError("term entries need at least a slot");
      for (std::size_t i = 0; i + 1 < arr.size(); ++i)
        node.seq.push_back(arr[i].get<Nat>());
      node.slot = arr.back().get<int>();
    } else {
      throw ParseError("provenance entries need seq or term");
    }
    code.provenance[label] = node;
    code.labels[node] = label;
  }
  if (code.provenance.size() != code.structure.domain.size())
    throw ParseError("provenance must cover the whole domain");
  return code;
}

}  // namespace isoforge
