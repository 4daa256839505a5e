#include <sstream>

#include <json.hpp>

#include "isoforge/error.hpp"
#include "isoforge/structure.hpp"

namespace isoforge {

namespace {

using nlohmann::json;

json parseDocument(const std::string& bytes) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("parse error at byte ") +
                     std::to_string(e.byte) + ": " + e.what());
  }
}

Label labelFrom(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(where + ": labels must be non-negative integers");
  return static_cast<Label>(j.get<long long>());
}

}  // namespace

Structure loadStructure(const std::string& bytes) {
  const json doc = parseDocument(bytes);
  if (!doc.is_object() || !doc.contains("domain") || !doc.contains("relations"))
    throw ParseError("structure document needs \"domain\" and \"relations\"");
  if (!doc["domain"].is_array())
    throw ParseError("\"domain\" must be an array");
  if (!doc["relations"].is_object())
    throw ParseError("\"relations\" must be an object");

  Structure s;
  for (const auto& j : doc["domain"]) s.domain.insert(labelFrom(j, "domain"));
  for (const auto& [name, pairs] : doc["relations"].items()) {
    if (!pairs.is_array())
      throw ParseError("relation " + name + " must be an array of pairs");
    PairSet set;
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2)
        throw ParseError("relation " + name + ": each pair must be [a,b]");
      Label a = labelFrom(p[0], "relation " + name);
      Label b = labelFrom(p[1], "relation " + name);
      if (!s.domain.count(a))
        throw ContractError("label " + std::to_string(a) + " out of domain");
      if (!s.domain.count(b))
        throw ContractError("label " + std::to_string(b) + " out of domain");
      set.insert({a, b});
    }
    s.relations[name] = std::move(set);
  }
  return s;
}

std::string saveStructure(const Structure& s) {
  assertWellFormed(s, "saveStructure");
  json doc;
  doc["domain"] = json::array();
  for (Label v : s.domain) doc["domain"].push_back(v);
  doc["relations"] = json::object();
  for (const auto& [name, pairs] : s.relations) {
    json arr = json::array();
    for (const auto& [a, b] : pairs) arr.push_back(json::array({a, b}));
    doc["relations"][name] = std::move(arr);
  }
  return doc.dump(2) + "\n";
}

std::string exportDot(const Structure& s) {
  assertWellFormed(s, "exportDot");
  std::ostringstream os;
  os << "digraph structure {\n";
  for (Label v : s.domain) os << "  " << v << ";\n";
  for (const auto& [a, b] : s.rel("edge"))
    if (a < b || !s.related("edge", b, a))
      os << "  " << a << " -> " << b << " [dir=none];\n";
  for (const auto& [a, b] : s.rel("order"))
    os << "  " << a << " -> " << b << " [style=dashed];\n";
  for (const auto& [a, b] : s.rel("tree"))
    os << "  " << a << " -> " << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace isoforge
