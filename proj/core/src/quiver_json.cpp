#include "coulomb/quiver_json.hpp"

#include <json.hpp>

namespace coulomb {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  if (!obj.contains(key)) fail(where, std::string("missing \"") + key + "\"");
  return obj.at(key);
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) fail(where + "." + key, "expected a string");
  return v.get<std::string>();
}

NodeKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "gauge") return NodeKind::Gauge;
  if (s == "flavor") return NodeKind::Flavor;
  if (s == "fixed") return NodeKind::Fixed;
  fail(where, "unknown kind '" + s + "' (expected gauge, flavor or fixed)");
}

GaugeGroup parse_group(const Json& g, const std::string& where) {
  const std::string family = string_field(g, "family", where);
  const Json& n = field(g, "n", where);
  if (!n.is_number_integer()) fail(where + ".n", "expected an integer");
  try {
    return GaugeGroup(parse_family(family), n.get<int>());
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.message());
  }
}

}  // namespace

Quiver quiver_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail("quiver", std::string("invalid JSON: ") + e.what());
  }

  Quiver q;
  const Json& nodes = field(doc, "nodes", "quiver");
  if (!nodes.is_array()) fail("nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "nodes[" + std::to_string(i) + "]";
    const Json& node = nodes[i];
    const std::string id = string_field(node, "id", where);
    const NodeKind kind = parse_kind(string_field(node, "kind", where), where + ".kind");
    const GaugeGroup group = parse_group(field(node, "group", where), where + ".group");
    try {
      q.add_node(id, kind, group);
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.message());
    }
  }

  if (doc.contains("edges")) {
    const Json& edges = doc.at("edges");
    if (!edges.is_array()) fail("edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const Json& e = edges[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
        fail(where, "expected a pair of node ids");
      }
      try {
        q.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
      } catch (const Error& err) {
        throw Error(err.code(), where + ": " + err.message());
      }
    }
  }
  return q;
}

std::string quiver_to_json(const Quiver& q) {
  Json doc;
  Json nodes = Json::array();
  for (const QuiverNode& n : q.nodes()) {
    nodes.push_back(Json{{"id", n.id},
                         {"kind", to_string(n.kind)},
                         {"group", Json{{"family", family_tag(n.group.family())}, {"n", n.group.n()}}}});
  }
  Json edges = Json::array();
  for (const QuiverEdge& e : q.edges()) edges.push_back(Json::array({q.node(e.a).id, q.node(e.b).id}));
  doc["nodes"] = nodes;
  doc["edges"] = edges;
  return doc.dump(2);
}

}  // namespace coulomb
