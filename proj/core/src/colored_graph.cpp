#include "abcover/colored_graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace abcover::graph {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::string default_edge_id(std::size_t index) { return "e" + std::to_string(index); }

int color_rank(const std::vector<std::uint32_t>& colors, int d) {
  gf2::BitMatrix m(colors.size(), d);
  for (std::size_t i = 0; i < colors.size(); ++i)
    for (int b = 0; b < d; ++b)
      if (colors[i] >> b & 1u) m.set(i, b);
  return static_cast<int>(gf2::rank(m));
}

}  // namespace

int ColoredGraph::add_vertex(std::string id) {
  if (vertex_index(id)) throw std::invalid_argument("duplicate vertex id " + id);
  vertices_.push_back(std::move(id));
  return static_cast<int>(vertices_.size()) - 1;
}

int ColoredGraph::add_edge(int a, int b, GroupElement color, std::string id) {
  const int n = static_cast<int>(vertices_.size());
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("edge endpoint out of range");
  if (id.empty()) id = default_edge_id(edges_.size());
  edges_.push_back({std::move(id), a == b ? EdgeKind::Loop : EdgeKind::Normal, a, b, color});
  return static_cast<int>(edges_.size()) - 1;
}

int ColoredGraph::add_loop(int v, GroupElement color, std::string id) {
  return add_edge(v, v, color, std::move(id));
}

int ColoredGraph::add_circular(GroupElement color, std::string id) {
  if (id.empty()) id = default_edge_id(edges_.size());
  edges_.push_back({std::move(id), EdgeKind::Circular, -1, -1, color});
  return static_cast<int>(edges_.size()) - 1;
}

std::optional<int> ColoredGraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> ColoredGraph::edge_index(const std::string& id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> ColoredGraph::incident(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.kind == EdgeKind::Circular) continue;
    if (e.a == v) out.push_back(static_cast<int>(i));
    if (e.b == v) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string ColoredGraph::tag(const std::string& key) const {
  auto it = tags_.find(key);
  return it == tags_.end() ? std::string{} : it->second;
}

std::vector<Violation> validate(const ColoredGraph& g) {
  std::vector<Violation> out;
  const int d = g.d();
  if (d < 1 || d > ring::kMaxRank) {
    out.push_back({"rank", "", "d must be between 1 and " + std::to_string(ring::kMaxRank)});
    return out;
  }
  std::vector<std::uint32_t> colors;
  for (const auto& e : g.edges()) {
    if (e.color.d != d) {
      out.push_back({"rank", e.id, "color has rank " + std::to_string(e.color.d)});
      continue;
    }
    if (e.color.is_identity()) out.push_back({"identity-color", e.id, "edge colored by the identity"});
    colors.push_back(e.color.bits);
  }
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(static_cast<int>(v));
    if (inc.size() != 3)
      out.push_back({"degree", g.vertices()[v], "degree " + std::to_string(inc.size())});
    std::uint32_t product = 0;
    for (int e : inc) product ^= g.edge(e).color.bits;
    if (product != 0)
      out.push_back({"vertex-relation", g.vertices()[v],
                     "product of incident colors is " + GroupElement{d, product}.to_string()});
  }
  if (color_rank(colors, d) != d)
    out.push_back({"generation", "", "colors do not generate G"});
  return out;
}

void require_valid(const ColoredGraph& g) {
  auto v = validate(g);
  if (v.empty()) return;
  std::ostringstream msg;
  msg << "invalid coloring:";
  for (const auto& x : v) msg << " [" << x.kind << (x.where.empty() ? "" : " at " + x.where) << "]";
  throw std::invalid_argument(msg.str());
}

CycleSubgraph gamma_H(const ColoredGraph& g, const Character& h) {
  CycleSubgraph c;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (ring::char_value(h, g.edge(i).color)) c.edges.push_back(static_cast<int>(i));
  return c;
}

int components_with_all_vertices(const ColoredGraph& g, const std::vector<bool>& keep_edge) {
  DisjointSets ds(g.num_vertices());
  int comps = static_cast<int>(g.num_vertices());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (!keep_edge[i]) continue;
    const auto& e = g.edge(i);
    if (e.kind == EdgeKind::Circular)
      ++comps;
    else if (ds.unite(e.a, e.b))
      --comps;
  }
  return comps;
}

Betti betti(const ColoredGraph& g) {
  std::vector<int> all(g.num_edges());
  std::iota(all.begin(), all.end(), 0);
  Betti b = betti(g, all);
  // Isolated vertices cannot occur in a trivalent graph, but count them anyway.
  std::vector<bool> touched(g.num_vertices(), false);
  for (const auto& e : g.edges())
    if (e.kind != EdgeKind::Circular) touched[e.a] = touched[e.b] = true;
  b.b0 += static_cast<int>(std::count(touched.begin(), touched.end(), false));
  return b;
}

Betti betti(const ColoredGraph& g, const std::vector<int>& edges) {
  DisjointSets ds(g.num_vertices());
  std::set<int> verts;
  int plain_edges = 0;
  int circular = 0;
  int merges = 0;
  for (int i : edges) {
    const auto& e = g.edge(i);
    if (e.kind == EdgeKind::Circular) {
      ++circular;
      continue;
    }
    ++plain_edges;
    verts.insert(e.a);
    verts.insert(e.b);
    if (ds.unite(e.a, e.b)) ++merges;
  }
  const int v = static_cast<int>(verts.size());
  const int comps = v - merges;
  return {comps + circular, plain_edges - v + comps + circular};
}

bool is_cycle(const ColoredGraph& g, const std::vector<int>& edges) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (int i : edges) {
    const auto& e = g.edge(i);
    if (e.kind == EdgeKind::Circular) continue;
    ++deg[e.a];
    ++deg[e.b];
  }
  return std::all_of(deg.begin(), deg.end(), [](int x) { return x == 0 || x == 2; });
}

bool is_simple(const ColoredGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges()) {
    if (e.kind != EdgeKind::Normal) return false;
    if (!seen.insert(std::minmax(e.a, e.b)).second) return false;
  }
  return true;
}

bool is_theta(const ColoredGraph& g) {
  if (g.num_vertices() != 2 || g.num_edges() != 3) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.kind == EdgeKind::Normal && e.a != e.b; });
}

bool is_unsplittable(const ColoredGraph& g) {
  for (std::uint32_t c = 0; c < (1u << g.d()); ++c) {
    std::vector<bool> keep(g.num_edges());
    for (std::size_t i = 0; i < g.num_edges(); ++i) keep[i] = g.edge(i).color.bits != c;
    if (components_with_all_vertices(g, keep) != 1) return false;
  }
  return true;
}

std::vector<SpecialCircuit> special_circuits(const ColoredGraph& g) {
  std::vector<SpecialCircuit> out;
  for (const auto& h : Character::all(g.d())) {
    auto c = gamma_H(g, h);
    if (c.edges.empty()) continue;
    if (betti(g, c.edges) != Betti{1, 1}) continue;
    std::vector<bool> keep(g.num_edges(), true);
    for (int e : c.edges) keep[e] = false;
    if (components_with_all_vertices(g, keep) != 1) continue;
    out.push_back({h, std::move(c)});
  }
  return out;
}

bool edge_parity(const ColoredGraph& g, const std::vector<int>& edges, const Character& h) {
  GroupElement product = GroupElement::identity(g.d());
  for (int e : edges) product = product * g.edge(e).color;
  return ring::char_value(h, product);
}

ColoredGraph wye_delta(const ColoredGraph& g, int v) {
  if (v < 0 || v >= static_cast<int>(g.num_vertices())) throw std::out_of_range("no such vertex");
  auto legs = g.incident(v);
  if (legs.size() != 3) throw std::invalid_argument("wye-delta needs a trivalent vertex");
  for (int e : legs)
    if (g.edge(e).kind == EdgeKind::Loop)
      throw std::invalid_argument("wye-delta is undefined at a vertex with a loop");
  if (legs[0] == legs[1] || legs[1] == legs[2] || legs[0] == legs[2])
    throw std::invalid_argument("wye-delta needs three distinct incident edges");

  ColoredGraph out(g.d());
  const std::string base = g.vertices()[v];
  std::vector<int> remap(g.num_vertices());
  for (std::size_t u = 0; u < g.num_vertices(); ++u)
    remap[u] = out.add_vertex(static_cast<int>(u) == v ? base + "_1" : g.vertices()[u]);
  const int w[3] = {remap[v], out.add_vertex(base + "_2"), out.add_vertex(base + "_3")};

  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(i);
    if (e.kind == EdgeKind::Circular) {
      out.add_circular(e.color, e.id);
      continue;
    }
    const auto leg = std::find(legs.begin(), legs.end(), static_cast<int>(i)) - legs.begin();
    int a = remap[e.a];
    int b = remap[e.b];
    if (leg < 3) {
      if (e.a == v) a = w[leg];
      if (e.b == v) b = w[leg];
    }
    out.add_edge(a, b, e.color, e.id);
  }
  // Triangle edge between legs i and j carries the third leg's color.
  const int pairs[3][3] = {{0, 1, 2}, {1, 2, 0}, {0, 2, 1}};
  for (const auto& p : pairs) {
    std::string id = base + "_" + std::to_string(p[0] + 1) + std::to_string(p[1] + 1);
    out.add_edge(w[p[0]], w[p[1]], g.edge(legs[p[2]]).color, id);
  }
  out.tags() = g.tags();
  return out;
}

ColoredGraph complete_coloring(const ColoredGraph& g,
                               const std::vector<std::optional<GroupElement>>& fixed) {
  if (fixed.size() != g.num_edges()) throw std::invalid_argument("one entry per edge expected");
  const int d = g.d();
  std::vector<int> unknown_col(g.num_edges(), -1);
  int unknowns = 0;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (fixed[i]) continue;
    if (g.edge(i).kind == EdgeKind::Circular)
      throw std::invalid_argument("circular edge colors cannot be inferred");
    unknown_col[i] = unknowns++;
  }
  gf2::BitMatrix m(g.num_vertices(), unknowns);
  std::vector<std::uint32_t> rhs(g.num_vertices(), 0);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    for (int e : g.incident(static_cast<int>(v))) {
      if (fixed[e])
        rhs[v] ^= fixed[e]->bits;
      else
        m.flip(v, unknown_col[e]);
    }
  }
  if (gf2::kernel_basis(m).dim() != 0) throw std::invalid_argument("coloring completion is not unique");
  std::vector<std::uint32_t> solution(unknowns, 0);
  for (int b = 0; b < d; ++b) {
    gf2::BitVector target(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
      if (rhs[v] >> b & 1u) target.set(v);
    auto x = gf2::solve(m, target);
    if (!x) throw std::invalid_argument("partial coloring has no completion");
    for (auto c : x->support()) solution[c] |= 1u << b;
  }
  ColoredGraph out = g;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    out.set_color(i, fixed[i] ? *fixed[i] : GroupElement{d, solution[unknown_col[i]]});
  return out;
}

}  // namespace abcover::graph
