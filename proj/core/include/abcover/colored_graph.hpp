#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abcover/graded.hpp"

namespace abcover::graph {

using ring::Character;
using ring::GroupElement;

enum class EdgeKind { Normal, Loop, Circular };

struct Edge {
  std::string id;
  EdgeKind kind = EdgeKind::Normal;
  int a = -1;  // vertex indices; a == b for loops, -1 for circular edges
  int b = -1;
  GroupElement color;

  bool operator==(const Edge&) const = default;
};

class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int d) : d_(d) {}

  int d() const { return d_; }
  void set_d(int d) { d_ = d; }

  int add_vertex(std::string id);
  int add_edge(int a, int b, GroupElement color, std::string id = {});
  int add_loop(int v, GroupElement color, std::string id = {});
  int add_circular(GroupElement color, std::string id = {});

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  Edge& edge(std::size_t i) { return edges_[i]; }
  std::optional<int> vertex_index(const std::string& id) const;
  std::optional<int> edge_index(const std::string& id) const;

  // Edge indices at v, a loop listed twice.
  std::vector<int> incident(int v) const;
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  std::map<std::string, std::string>& tags() { return tags_; }
  const std::map<std::string, std::string>& tags() const { return tags_; }
  std::string tag(const std::string& key) const;

  void set_color(std::size_t e, GroupElement c) { edges_[e].color = c; }

  bool operator==(const ColoredGraph&) const = default;

 private:
  int d_ = 0;
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, std::string> tags_;
};

struct Violation {
  std::string kind;    // "degree", "identity-color", "vertex-relation", "rank", "generation"
  std::string where;   // vertex or edge id, empty for global issues
  std::string detail;
};

std::vector<Violation> validate(const ColoredGraph& g);
void require_valid(const ColoredGraph& g);  // throws std::invalid_argument listing violations

// Sorted edge indices of a sub-cycle.
struct CycleSubgraph {
  std::vector<int> edges;
  bool operator==(const CycleSubgraph&) const = default;
};

CycleSubgraph gamma_H(const ColoredGraph& g, const Character& h);

struct Betti {
  int b0 = 0;
  int b1 = 0;
  bool operator==(const Betti&) const = default;
};

Betti betti(const ColoredGraph& g);
// Subgraph spanned by the given edges and their endpoints.
Betti betti(const ColoredGraph& g, const std::vector<int>& edges);
// All vertices, only the given edges.
int components_with_all_vertices(const ColoredGraph& g, const std::vector<bool>& keep_edge);

bool is_cycle(const ColoredGraph& g, const std::vector<int>& edges);
bool is_simple(const ColoredGraph& g);
bool is_theta(const ColoredGraph& g);
bool is_unsplittable(const ColoredGraph& g);

struct SpecialCircuit {
  Character h;
  CycleSubgraph circuit;
};
std::vector<SpecialCircuit> special_circuits(const ColoredGraph& g);

// delta_H(g_1 ... g_n) computed from the colors of the listed edges.
bool edge_parity(const ColoredGraph& g, const std::vector<int>& edges, const Character& h);

ColoredGraph wye_delta(const ColoredGraph& g, int v);

// Recolor edges so the vertex relations hold, keeping the `fixed` entries.
// Throws if the completion does not exist or is not unique.
ColoredGraph complete_coloring(const ColoredGraph& g, const std::vector<std::optional<GroupElement>>& fixed);

}  // namespace abcover::graph
