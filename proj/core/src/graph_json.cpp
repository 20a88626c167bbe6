#include "abcover/graph_json.hpp"

#include <json.hpp>

namespace abcover::graph {

using nlohmann::json;

namespace {

int vertex_ref(const ColoredGraph& g, const json& v) {
  if (!v.is_string()) throw ParseError("vertex reference must be a string");
  auto idx = g.vertex_index(v.get<std::string>());
  if (!idx) throw ParseError("unknown vertex " + v.get<std::string>());
  return *idx;
}

}  // namespace

ColoredGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph document must be an object");
  try {
    int d = 0;
    if (doc.contains("d")) {
      if (!doc["d"].is_number_integer()) throw ParseError("\"d\" must be an integer");
      d = doc["d"].get<int>();
    }
    if (d < 0 || d > ring::kMaxRank) throw ParseError("\"d\" out of range");
    ColoredGraph g(d);
    for (const auto& v : doc.value("vertices", json::array())) {
      if (!v.is_string()) throw ParseError("vertex ids must be strings");
      g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : doc.value("edges", json::array())) {
      if (!e.is_object()) throw ParseError("edge entries must be objects");
      std::string id = e.value("id", std::string{});
      GroupElement color{d, 0};
      if (e.contains("color")) {
        if (!e["color"].is_string()) throw ParseError("edge color must be a bit string");
        color = GroupElement::from_string(e["color"].get<std::string>());
        if (color.d != d) throw ParseError("color length differs from d in edge " + id);
      }
      if (!e.contains("ends")) throw ParseError("edge without \"ends\"");
      const auto& ends = e["ends"];
      if (ends.is_string() && ends.get<std::string>() == "circular") {
        g.add_circular(color, id);
      } else if (ends.is_object() && ends.contains("loop")) {
        g.add_loop(vertex_ref(g, ends["loop"]), color, id);
      } else if (ends.is_array() && ends.size() == 2) {
        g.add_edge(vertex_ref(g, ends[0]), vertex_ref(g, ends[1]), color, id);
      } else {
        throw ParseError("edge \"ends\" must be [v,w], {\"loop\": v} or \"circular\"");
      }
    }
    if (doc.contains("tags")) {
      if (!doc["tags"].is_object()) throw ParseError("\"tags\" must be an object");
      for (const auto& [k, v] : doc["tags"].items())
        g.tags()[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return g;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(e.what());
  }
}

std::string graph_to_json(const ColoredGraph& g, int indent) {
  json doc;
  doc["d"] = g.d();
  doc["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json je;
    je["id"] = e.id;
    switch (e.kind) {
      case EdgeKind::Circular:
        je["ends"] = "circular";
        break;
      case EdgeKind::Loop:
        je["ends"] = {{"loop", g.vertices()[e.a]}};
        break;
      case EdgeKind::Normal:
        je["ends"] = {g.vertices()[e.a], g.vertices()[e.b]};
        break;
    }
    je["color"] = e.color.to_string();
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  doc["tags"] = g.tags();
  return doc.dump(indent);
}

}  // namespace abcover::graph
