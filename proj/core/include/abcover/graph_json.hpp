#pragma once

#include <stdexcept>
#include <string>

#include "abcover/colored_graph.hpp"

namespace abcover::graph {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Schema: {"d": int, "vertices": [id], "edges": [{"id", "ends": [v,w] | {"loop": v} |
// "circular", "color": "bits"}], "tags": {key: value}}. Missing colors read as
// the identity, so uncolored shapes can be loaded for enumeration.
ColoredGraph graph_from_json(const std::string& text);
std::string graph_to_json(const ColoredGraph& g, int indent = -1);

}  // namespace abcover::graph
