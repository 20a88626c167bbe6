#include "abcover/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace abcover::graph {

namespace {

using Multiplicity = std::vector<std::vector<int>>;

Multiplicity multiplicities(const ColoredGraph& g) {
  Multiplicity m(g.num_vertices(), std::vector<int>(g.num_vertices(), 0));
  for (const auto& e : g.edges()) {
    if (e.kind == EdgeKind::Circular) continue;
    ++m[e.a][e.b];
    if (e.a != e.b) ++m[e.b][e.a];
  }
  return m;
}

std::vector<int> search_order(const ColoredGraph& g) {
  std::vector<int> order;
  std::vector<bool> seen(g.num_vertices(), false);
  for (std::size_t s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::size_t head = order.size();
    order.push_back(static_cast<int>(s));
    while (head < order.size()) {
      int v = order[head++];
      for (int e : g.incident(v)) {
        const auto& edge = g.edge(e);
        int w = edge.a == v ? edge.b : edge.a;
        if (!seen[w]) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

std::pair<int, int> ends_key(const Edge& e) {
  if (e.kind == EdgeKind::Circular) return {-1, -1};
  return std::minmax(e.a, e.b);
}

// Every bijection between parallel classes, given a full vertex map.
void expand_edge_maps(const ColoredGraph& a, const ColoredGraph& b, const std::vector<int>& vmap,
                      std::vector<Isomorphism>& out, std::size_t limit) {
  std::map<std::pair<int, int>, std::vector<int>> classes_b;
  for (std::size_t i = 0; i < b.num_edges(); ++i)
    classes_b[ends_key(b.edge(i))].push_back(static_cast<int>(i));
  std::map<std::pair<int, int>, std::vector<int>> classes_a;
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    auto key = ends_key(a.edge(i));
    if (key.first >= 0) key = std::minmax(vmap[key.first], vmap[key.second]);
    classes_a[key].push_back(static_cast<int>(i));
  }
  std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
  for (auto& [key, edges_a] : classes_a) {
    auto it = classes_b.find(key);
    if (it == classes_b.end() || it->second.size() != edges_a.size()) return;
    groups.push_back({edges_a, it->second});
  }
  Isomorphism iso{vmap, std::vector<int>(a.num_edges(), -1)};
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (limit && out.size() >= limit) return;
    if (gi == groups.size()) {
      out.push_back(iso);
      return;
    }
    auto targets = groups[gi].second;
    std::sort(targets.begin(), targets.end());
    do {
      for (std::size_t j = 0; j < targets.size(); ++j) iso.edge_map[groups[gi].first[j]] = targets[j];
      rec(gi + 1);
    } while (std::next_permutation(targets.begin(), targets.end()));
  };
  rec(0);
}

}  // namespace

std::vector<Isomorphism> isomorphisms(const ColoredGraph& a, const ColoredGraph& b, std::size_t limit) {
  std::vector<Isomorphism> out;
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return out;
  const auto ma = multiplicities(a);
  const auto mb = multiplicities(b);
  const auto order = search_order(a);
  const std::size_t n = a.num_vertices();
  std::vector<int> vmap(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (limit && out.size() >= limit) return;
    if (depth == n) {
      expand_edge_maps(a, b, vmap, out, limit);
      return;
    }
    const int v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(static_cast<int>(w))) continue;
      if (ma[v][v] != mb[w][w]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const int u = order[j];
        ok = ma[v][u] == mb[w][vmap[u]];
      }
      if (!ok) continue;
      vmap[v] = static_cast<int>(w);
      used[w] = true;
      rec(depth + 1);
      used[w] = false;
      vmap[v] = -1;
    }
  };
  rec(0);
  return out;
}

std::vector<std::uint32_t> relabel_colors(const std::vector<std::uint32_t>& colors) {
  struct Row {
    std::uint32_t vec;
    std::uint32_t combo;  // which first-appearance colors XOR to vec
  };
  std::vector<Row> rows;  // sorted by decreasing leading bit
  int next = 0;
  std::vector<std::uint32_t> out;
  out.reserve(colors.size());
  for (auto c : colors) {
    std::uint32_t v = c;
    std::uint32_t combo = 0;
    for (const auto& r : rows) {
      if (v & std::bit_floor(r.vec)) {
        v ^= r.vec;
        combo ^= r.combo;
      }
    }
    if (v == 0) {
      out.push_back(combo);
      continue;
    }
    const std::uint32_t fresh = 1u << next++;
    rows.push_back({v, combo ^ fresh});
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.vec > y.vec; });
    out.push_back(fresh);
  }
  return out;
}

std::vector<std::uint32_t> canonical_coloring(const ColoredGraph& g, const std::vector<Isomorphism>& autos) {
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> seq(g.num_edges());
  for (const auto& iso : autos) {
    for (std::size_t e = 0; e < g.num_edges(); ++e) seq[e] = g.edge(iso.edge_map[e]).color.bits;
    auto r = relabel_colors(seq);
    if (best.empty() || r < best) best = std::move(r);
  }
  return best;
}

bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.d() != b.d()) return false;
  std::vector<std::uint32_t> ca(a.num_edges());
  for (std::size_t e = 0; e < a.num_edges(); ++e) ca[e] = a.edge(e).color.bits;
  const auto target = relabel_colors(ca);
  std::vector<std::uint32_t> seq(a.num_edges());
  for (const auto& iso : isomorphisms(a, b)) {
    for (std::size_t e = 0; e < a.num_edges(); ++e) seq[e] = b.edge(iso.edge_map[e]).color.bits;
    if (relabel_colors(seq) == target) return true;
  }
  return false;
}

std::vector<ColoredGraph> enumerate_colorings(const ColoredGraph& shape, int d, bool up_to_symmetry) {
  if (shape.num_edges() > kMaxEnumerationEdges)
    throw std::length_error("graph too large for exhaustive enumeration");
  if (d < 1 || d > 8) throw std::out_of_range("enumeration supports 1 <= d <= 8");
  for (std::size_t v = 0; v < shape.num_vertices(); ++v)
    if (shape.degree(static_cast<int>(v)) != 3) throw std::invalid_argument("graph is not trivalent");

  const std::size_t ne = shape.num_edges();
  const std::uint32_t top = 1u << d;
  std::vector<std::vector<int>> inc(shape.num_vertices());
  for (std::size_t v = 0; v < shape.num_vertices(); ++v) inc[v] = shape.incident(static_cast<int>(v));
  std::vector<std::vector<int>> edge_vertices(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& edge = shape.edge(e);
    if (edge.kind == EdgeKind::Circular) continue;
    edge_vertices[e].push_back(edge.a);
    if (edge.b != edge.a) edge_vertices[e].push_back(edge.b);
  }

  std::vector<std::uint32_t> color(ne, 0);  // 0 = unassigned
  std::vector<int> trail;
  std::vector<std::vector<std::uint32_t>> found;

  auto assign = [&](int e, std::uint32_t c) -> bool {
    std::vector<int> queue{e};
    color[e] = c;
    trail.push_back(e);
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      for (int v : edge_vertices[cur]) {
        std::uint32_t product = 0;
        int open = -1;
        int open_count = 0;
        for (int f : inc[v]) {
          if (color[f]) {
            product ^= color[f];
          } else if (f != open) {
            open = f;
            ++open_count;
          }
        }
        if (open_count == 0) {
          if (product != 0) return false;
        } else if (open_count == 1) {
          const auto& oe = shape.edge(open);
          if (oe.kind == EdgeKind::Loop) {
            if (product != 0) return false;
            continue;
          }
          if (product == 0) return false;
          color[open] = product;
          trail.push_back(open);
          queue.push_back(open);
        }
      }
    }
    return true;
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      color[trail.back()] = 0;
      trail.pop_back();
    }
  };

  std::function<void()> rec = [&] {
    auto it = std::find(color.begin(), color.end(), 0u);
    if (it == color.end()) {
      gf2::BitMatrix m(ne, d);
      for (std::size_t e = 0; e < ne; ++e)
        for (int b = 0; b < d; ++b)
          if (color[e] >> b & 1u) m.set(e, b);
      if (static_cast<int>(gf2::rank(m)) == d) found.push_back(color);
      return;
    }
    const int e = static_cast<int>(it - color.begin());
    // Up to GL(d): a branch color either lies in the span x1..xr of the colors
    // so far or is the next basis vector. Forcing depends only on which edges
    // are colored, so this keeps exactly one coloring per GL(d) orbit.
    std::uint32_t limit = top - 1;
    if (up_to_symmetry) {
      std::uint32_t span = 0;
      for (auto c : color) span |= c;
      limit = std::min(limit, std::bit_floor(span) << 1 | (span == 0));
    }
    for (std::uint32_t c = 1; c <= limit; ++c) {
      const std::size_t mark = trail.size();
      if (assign(e, c)) rec();
      undo_to(mark);
    }
  };
  rec();

  auto build = [&](const std::vector<std::uint32_t>& colors) {
    ColoredGraph g = shape;
    g.set_d(d);
    for (std::size_t e = 0; e < ne; ++e) g.set_color(e, {d, colors[e]});
    return g;
  };

  std::vector<ColoredGraph> out;
  if (!up_to_symmetry) {
    for (const auto& c : found) out.push_back(build(c));
    return out;
  }
  const auto autos = automorphisms(shape);
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& c : found) {
    auto g = build(c);
    auto key = canonical_coloring(g, autos);
    if (seen.insert(key).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace abcover::graph
