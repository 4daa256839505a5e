#include "isoforge/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoforge/acceptance.hpp"
#include "isoforge/coding.hpp"
#include "isoforge/error.hpp"
#include "isoforge/morphism.hpp"
#include "isoforge/quotient.hpp"
#include "isoforge/structure.hpp"
#include "isoforge/sums.hpp"
#include "isoforge/treecode.hpp"
#include "isoforge/wspace.hpp"

namespace isoforge {

namespace {

using nlohmann::json;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Structure loadStructureFile(const std::string& path) {
  return loadStructure(readFile(path));
}

json parseJsonFile(const std::string& path) {
  try {
    return json::parse(readFile(path));
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json witnessJson(const MorphismWitness& w) {
  json map = json::array();
  for (const auto& [a, b] : w.map) map.push_back(json::array({a, b}));
  return {{"kind", kindName(w.kind)}, {"map", std::move(map)}};
}

std::map<Label, Label> labelMapFromJson(const json& arr, const std::string& what) {
  if (!arr.is_array()) throw ParseError(what + ": \"map\" must be an array of pairs");
  std::map<Label, Label> out;
  for (const auto& p : arr) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      throw ParseError(what + ": each map entry must be [a,b]");
    out[p[0].get<Label>()] = p[1].get<Label>();
  }
  return out;
}

MorphismWitness loadWitnessFile(const std::string& path) {
  const json doc = parseJsonFile(path);
  if (!doc.is_object() || !doc.contains("kind") || !doc.contains("map"))
    throw ParseError(path + ": witness document needs \"kind\" and \"map\"");
  MorphismWitness w;
  const auto kind = kindFromName(doc["kind"].get<std::string>());
  if (!kind) throw ParseError(path + ": unknown morphism kind " + doc["kind"].dump());
  w.kind = *kind;
  w.map = labelMapFromJson(doc["map"], path);
  return w;
}

FinPartition loadPartitionFile(const std::string& path) {
  const json doc = parseJsonFile(path);
  if (!doc.is_object() || !doc.contains("ground") || !doc.contains("blocks"))
    throw ParseError(path + ": partition document needs \"ground\" and \"blocks\"");
  FinPartition p;
  for (const auto& v : doc["ground"]) {
    if (!v.is_number_integer()) throw ParseError(path + ": ground labels must be integers");
    p.ground.insert(v.get<Label>());
  }
  for (const auto& block : doc["blocks"]) {
    if (!block.is_array()) throw ParseError(path + ": each block must be an array");
    std::set<Label> b;
    for (const auto& v : block) b.insert(v.get<Label>());
    p.blocks.push_back(std::move(b));
  }
  assertPartition(p);
  return p;
}

ReductionMap loadReductionFile(const std::string& path) {
  const json doc = parseJsonFile(path);
  if (!doc.is_object() || !doc.contains("map"))
    throw ParseError(path + ": reduction document needs \"map\"");
  return labelMapFromJson(doc["map"], path);
}

json structureJson(const Structure& s) { return json::parse(saveStructure(s)); }

json reductionJson(const ReductionMap& m) {
  json arr = json::array();
  for (const auto& [a, b] : m) arr.push_back(json::array({a, b}));
  return arr;
}

WitnessKit loadKitFile(const std::string& path) {
  const json doc = parseJsonFile(path);
  if (!doc.is_object() || !doc.contains("familyPrime") ||
      !doc.contains("familySecond") || !doc.contains("classes"))
    throw ParseError(path +
                     ": kit document needs \"familyPrime\", \"familySecond\" "
                     "and \"classes\"");

  WitnessKit kit;
  for (const auto& d : doc["familyPrime"])
    kit.familyPrime.push_back(loadStructure(d.dump()));
  for (const auto& d : doc["familySecond"])
    kit.familySecond.push_back(loadStructure(d.dump()));

  if (!doc["classes"].is_array() ||
      doc["classes"].size() != kit.familySecond.size())
    throw ParseError(path + ": \"classes\" must list one class per familySecond member");
  auto byValue = std::make_shared<std::map<Structure, std::size_t>>();
  for (std::size_t i = 0; i < kit.familySecond.size(); ++i) {
    const std::size_t cls = doc["classes"][i].get<std::size_t>();
    const auto [it, fresh] = byValue->emplace(kit.familySecond[i], cls);
    if (!fresh && it->second != cls)
      throw ParseError(path + ": identical members listed with different classes");
  }
  kit.classify = [byValue](const Structure& z) {
    const auto it = byValue->find(z);
    if (it == byValue->end())
      throw ContractError("classify: structure is not a kit member");
    return it->second;
  };

  if (doc.contains("section")) {
    if (!doc["section"].is_array())
      throw ParseError(path + ": \"section\" must be an array of member indices");
    auto picks = std::make_shared<std::vector<Structure>>();
    for (const auto& v : doc["section"]) {
      const std::size_t idx = v.get<std::size_t>();
      if (idx >= kit.familySecond.size())
        throw ParseError(path + ": section index " + std::to_string(idx) +
                         " out of range");
      picks->push_back(kit.familySecond[idx]);
    }
    kit.section = [picks](std::size_t cls) {
      if (cls >= picks->size())
        throw ContractError("section: class " + std::to_string(cls) +
                            " has no pick");
      return (*picks)[cls];
    };
  }
  return kit;
}

std::vector<ClassRep> loadRepsFile(const std::string& path) {
  const json doc = parseJsonFile(path);
  if (!doc.is_array())
    throw ParseError(path + ": representatives document must be an array");
  std::vector<ClassRep> reps;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("x") || !entry.contains("z"))
      throw ParseError(path + ": each representative needs \"x\" and \"z\"");
    reps.push_back({loadStructure(entry["x"].dump()),
                    loadStructure(entry["z"].dump())});
  }
  return reps;
}

json wspaceJson(const WSpace& w) {
  json entries = json::array();
  for (const WEntry& e : w.entries)
    entries.push_back({{"x", structureJson(e.x)},
                       {"z", structureJson(e.z)},
                       {"g", e.g.images}});
  const auto matrix = [](const std::vector<std::vector<bool>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (bool v : row) r.push_back(v ? 1 : 0);
      rows.push_back(std::move(r));
    }
    return rows;
  };
  json images = json::array();
  for (const Structure& s : w.images) images.push_back(structureJson(s));
  return {{"entries", std::move(entries)},
          {"S", matrix(w.S)},
          {"F", matrix(w.F)},
          {"images", std::move(images)}};
}

std::uint64_t budgetFromEnv() {
  const char* env = std::getenv("IFORGE_BUDGET");
  if (!env || !*env) return 0;
  const std::string text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("IFORGE_BUDGET must be a non-negative integer, got \"" +
                     text + "\"");
  return value;
}

}  // namespace

int runCli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite relational structures: morphism oracles, tree codings, "
               "ordered sums, and quotient bijections"};
  app.name("isoforge");
  app.require_subcommand(1);
  int code = 0;

  // pair / unpair / rp
  auto pn = std::make_shared<std::array<Nat, 2>>();
  CLI::App* pairCmd = app.add_subcommand("pair", "Pairing index of two naturals");
  pairCmd->add_option("n", (*pn)[0], "first component")->required();
  pairCmd->add_option("m", (*pn)[1], "second component")->required();
  pairCmd->callback([&out, pn] { out << pairIndex((*pn)[0], (*pn)[1]) << "\n"; });

  auto uk = std::make_shared<Nat>();
  CLI::App* unpairCmd = app.add_subcommand("unpair", "Components of a pairing index");
  unpairCmd->add_option("k", *uk, "pairing index")->required();
  unpairCmd->callback([&out, uk] {
    const auto [n, m] = unpairIndex(*uk);
    out << n << " " << m << "\n";
  });

  auto rpSeq = std::make_shared<Seq>();
  CLI::App* rpCmd = app.add_subcommand("rp", "Relevant pair of a sequence");
  rpCmd->add_option("entries", *rpSeq, "sequence entries")->required()->expected(-1);
  rpCmd->callback([&out, rpSeq] {
    const auto [a, b] = relevantPair(*rpSeq);
    out << a << " " << b << "\n";
  });

  // morphism search verbs
  const auto addMorphVerb = [&](const std::string& verb, MorphKind kind,
                                const std::string& desc) {
    auto paths = std::make_shared<std::array<std::string, 2>>();
    CLI::App* cmd = app.add_subcommand(verb, desc);
    cmd->add_option("a", (*paths)[0], "source structure document")->required();
    cmd->add_option("b", (*paths)[1], "target structure document")->required();
    cmd->callback([&out, &err, &code, paths, kind] {
      const Structure a = loadStructureFile((*paths)[0]);
      const Structure b = loadStructureFile((*paths)[1]);
      SearchOptions opts;
      opts.budget = budgetFromEnv();
      const SearchOutcome got = search(a, b, kind, opts);
      switch (got.status) {
        case SearchStatus::Found:
          out << witnessJson(*got.witness).dump(2) << "\n";
          code = 0;
          break;
        case SearchStatus::None:
          out << "none\n";
          code = 1;
          break;
        case SearchStatus::BudgetExhausted:
          err << "budget exhausted\n";
          code = 2;
          break;
      }
    });
  };
  addMorphVerb("iso", MorphKind::Isomorphism, "Search for an isomorphism");
  addMorphVerb("embed", MorphKind::Embedding, "Search for an embedding");
  addMorphVerb("hom", MorphKind::Homomorphism, "Search for a homomorphism");
  addMorphVerb("weakhom", MorphKind::WeakHomomorphism,
               "Search for a weak homomorphism");
  addMorphVerb("epi", MorphKind::Epimorphism, "Search for an epimorphism");
  addMorphVerb("weakepi", MorphKind::WeakEpimorphism,
               "Search for a weak epimorphism");

  // tree codings
  struct BuildArgs {
    std::string path;
    int maxLen = 0;
    int alphabet = 0;
  };
  const auto addBuildVerb = [&](const std::string& verb, CodeKind kind,
                                const std::string& desc) {
    auto a = std::make_shared<BuildArgs>();
    CLI::App* cmd = app.add_subcommand(verb, desc);
    cmd->add_option("x", a->path, "graph document")->required();
    cmd->add_option("--maxlen", a->maxLen, "maximum sequence length");
    cmd->add_option("--alphabet", a->alphabet, "alphabet size");
    cmd->callback([&out, a, kind] {
      const Structure x = loadStructureFile(a->path);
      TruncSpec spec;
      spec.maxLen = a->maxLen ? a->maxLen : (kind == CodeKind::T ? 4 : 2);
      spec.alphabet = a->alphabet
                          ? a->alphabet
                          : static_cast<int>(x.domain.size()) +
                                (kind == CodeKind::R ? 1 : 0);
      out << saveTreeCode(kind == CodeKind::T ? buildT(x, spec)
                                              : buildR(x, spec));
    });
  };
  addBuildVerb("build-t", CodeKind::T, "Truncated full coding tree of a graph");
  addBuildVerb("build-r", CodeKind::R, "Truncated wildcard coding tree of a graph");

  struct LiftArgs {
    std::string x, y, sigma, kind = "t";
    int maxLen = 0;
    int alphabet = 0;
  };
  auto la = std::make_shared<LiftArgs>();
  CLI::App* liftCmd =
      app.add_subcommand("lift-iso", "Lift a graph isomorphism to the codes");
  liftCmd->add_option("x", la->x, "source graph document")->required();
  liftCmd->add_option("y", la->y, "target graph document")->required();
  liftCmd->add_option("sigma", la->sigma, "isomorphism witness document")->required();
  liftCmd->add_option("--kind", la->kind, "coding kind: t or r")
      ->check(CLI::IsMember({"t", "r"}));
  liftCmd->add_option("--maxlen", la->maxLen, "maximum sequence length");
  liftCmd->add_option("--alphabet", la->alphabet, "alphabet size");
  liftCmd->callback([&out, la] {
    const Structure x = loadStructureFile(la->x);
    const Structure y = loadStructureFile(la->y);
    const MorphismWitness sigma = loadWitnessFile(la->sigma);
    const CodeKind kind = la->kind == "r" ? CodeKind::R : CodeKind::T;
    TruncSpec spec;
    spec.maxLen = la->maxLen ? la->maxLen : (kind == CodeKind::T ? 4 : 2);
    const int n = static_cast<int>(std::max(x.domain.size(), y.domain.size()));
    spec.alphabet =
        la->alphabet ? la->alphabet : n + (kind == CodeKind::R ? 1 : 0);
    out << witnessJson(liftIso(kind, x, y, sigma, spec)).dump(2) << "\n";
  });

  struct EmbedArgs {
    std::string x, y;
    int maxLen = 2;
    int alphabet = 0;
  };
  auto ea = std::make_shared<EmbedArgs>();
  CLI::App* embedCmd = app.add_subcommand(
      "embed-universal", "Embed a coding tree into the even fragment");
  embedCmd->add_option("x", ea->x, "source graph document")->required();
  embedCmd->add_option("y", ea->y, "any graph document for the target")->required();
  embedCmd->add_option("--maxlen", ea->maxLen, "source maximum sequence length");
  embedCmd->add_option("--alphabet", ea->alphabet, "source alphabet size");
  embedCmd->callback([&out, ea] {
    const Structure x = loadStructureFile(ea->x);
    const Structure y = loadStructureFile(ea->y);
    TruncSpec spec;
    spec.maxLen = ea->maxLen;
    spec.alphabet =
        ea->alphabet
            ? ea->alphabet
            : static_cast<int>(std::max(x.domain.size(), y.domain.size()));
    const EmbedUniversalResult res = embedUniversalT(x, y, spec);
    const json doc = {{"witness", witnessJson(res.witness)},
                      {"targetSpec",
                       {{"maxLen", res.targetSpec.maxLen},
                        {"alphabet", res.targetSpec.alphabet}}}};
    out << doc.dump(2) << "\n";
  });

  struct WeakEpiArgs {
    std::string x, y, f;
    int maxLen = 2;
  };
  auto wa = std::make_shared<WeakEpiArgs>();
  CLI::App* weCmd = app.add_subcommand(
      "weak-epi", "Weak epimorphism of wildcard codes from a graph embedding");
  weCmd->add_option("x", wa->x, "embedded graph document")->required();
  weCmd->add_option("y", wa->y, "host graph document")->required();
  weCmd->add_option("f", wa->f, "embedding witness document")->required();
  weCmd->add_option("--maxlen", wa->maxLen, "maximum sequence length");
  weCmd->callback([&out, wa] {
    const Structure x = loadStructureFile(wa->x);
    const Structure y = loadStructureFile(wa->y);
    const MorphismWitness f = loadWitnessFile(wa->f);
    TruncSpec spec;
    spec.maxLen = wa->maxLen;
    spec.alphabet = static_cast<int>(x.domain.size()) + 1;
    const WeakEpiResult res = weakEpiR(x, y, f, spec);
    const json doc = {{"witness", witnessJson(res.witness)},
                      {"from",
                       {{"maxLen", res.from.spec.maxLen},
                        {"alphabet", res.from.spec.alphabet}}},
                      {"to",
                       {{"maxLen", res.to.spec.maxLen},
                        {"alphabet", res.to.spec.alphabet}}}};
    out << doc.dump(2) << "\n";
  });

  // sums
  const auto addSumVerb = [&](const std::string& verb, bool rooted,
                              const std::string& desc) {
    auto paths = std::make_shared<std::array<std::string, 2>>();
    CLI::App* cmd = app.add_subcommand(verb, desc);
    cmd->add_option("x", (*paths)[0], "irreflexive-ordered part")->required();
    cmd->add_option("z", (*paths)[1], "reflexive-ordered part")->required();
    cmd->callback([&out, paths, rooted] {
      const Structure x = loadStructureFile((*paths)[0]);
      const Structure z = loadStructureFile((*paths)[1]);
      out << saveStructure(rooted ? oplusRooted(x, z) : oplus(x, z));
    });
  };
  addSumVerb("oplus", false, "Disjoint ordered sum, even/odd labeled");
  addSumVerb("oplus-rooted", true, "Ordered sum with the roots joined by an edge");

  auto gk = std::make_shared<int>(1);
  CLI::App* enumCmd =
      app.add_subcommand("enum-g", "Parity-monotone permutations of 0..2k-1");
  enumCmd->add_option("k", *gk, "half size")->required();
  enumCmd->callback([&out, gk] {
    json arr = json::array();
    for (const ParityPerm& g : enumerateG(*gk)) arr.push_back(g.images);
    out << arr.dump(2) << "\n";
  });

  struct AssembleArgs {
    std::string kit, reps;
    int k = 1;
  };
  auto aa = std::make_shared<AssembleArgs>();
  CLI::App* asmCmd =
      app.add_subcommand("assemble-w", "Assemble a witness space from a kit");
  asmCmd->add_option("kit", aa->kit, "kit document")->required();
  asmCmd->add_option("k", aa->k, "permutation half size")->required();
  asmCmd->add_option("--n-classes", aa->reps,
                     "named class representatives document");
  asmCmd->callback([&out, aa] {
    const WitnessKit kit = loadKitFile(aa->kit);
    const WSpace w = aa->reps.empty()
                         ? assembleW(kit, aa->k)
                         : assembleW(kit, aa->k, loadRepsFile(aa->reps));
    out << wspaceJson(w).dump(2) << "\n";
  });

  // quotients
  auto sbPaths = std::make_shared<std::array<std::string, 4>>();
  CLI::App* sbCmd = app.add_subcommand(
      "sb", "Classwise bijection from reductions in both directions");
  sbCmd->add_option("e", (*sbPaths)[0], "left partition document")->required();
  sbCmd->add_option("g", (*sbPaths)[1], "right partition document")->required();
  sbCmd->add_option("phi", (*sbPaths)[2], "left-to-right reduction")->required();
  sbCmd->add_option("psi", (*sbPaths)[3], "right-to-left reduction")->required();
  sbCmd->callback([&out, sbPaths] {
    const FinPartition e = loadPartitionFile((*sbPaths)[0]);
    const FinPartition g = loadPartitionFile((*sbPaths)[1]);
    const ReductionMap phi = loadReductionFile((*sbPaths)[2]);
    const ReductionMap psi = loadReductionFile((*sbPaths)[3]);
    const SBResult r = sbBijection(e, g, phi, psi);
    const json doc = {{"blockMap", r.blockMap},
                      {"phiPrime", reductionJson(r.phiPrime)},
                      {"psiPrime", reductionJson(r.psiPrime)}};
    out << doc.dump(2) << "\n";
  });

  // export
  auto dotPath = std::make_shared<std::string>();
  CLI::App* dotCmd = app.add_subcommand("dot", "Graphviz export of a structure");
  dotCmd->add_option("x", *dotPath, "structure document")->required();
  dotCmd->callback([&out, dotPath] { out << exportDot(loadStructureFile(*dotPath)); });

  // acceptance suite
  struct SuiteArgs {
    SuiteOptions opts;
    bool jsonOut = false;
  };
  auto sa = std::make_shared<SuiteArgs>();
  CLI::App* suiteCmd = app.add_subcommand("suite", "Run the acceptance suite");
  suiteCmd->add_option("--filter", sa->opts.filter,
                       "run only criteria whose name contains this");
  suiteCmd->add_option("--seed", sa->opts.seed, "quotient generator seed");
  suiteCmd->add_option("--maxlen", sa->opts.maxLenT,
                       "sequence length bound for the transfer criterion");
  suiteCmd->add_flag("--json", sa->jsonOut, "machine-readable report");
  suiteCmd->callback([&out, &err, &code, sa] {
    const SuiteReport report =
        runSuite(sa->opts, sa->jsonOut ? nullptr : &out);
    if (report.rows.empty()) {
      err << "filter matched no criteria\n";
      code = 2;
      return;
    }
    if (sa->jsonOut) {
      out << reportJson(report);
    } else {
      std::size_t passed = 0;
      for (const CriterionResult& row : report.rows)
        if (row.passed) ++passed;
      out << passed << "/" << report.rows.size() << " criteria passed\n";
    }
    code = report.allPassed() ? 0 : 1;
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
    return code;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace isoforge
