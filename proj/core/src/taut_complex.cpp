#include "abcover/taut_complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "abcover/generators.hpp"

namespace abcover::complex {

using graph::EdgeKind;

struct GraphComplex::Cache {
  std::mutex mu;
  std::map<int, std::unique_ptr<Level>> levels;
};

namespace {

void check_level(const GraphComplex& gc, int k) {
  if (k < 1 || k > gc.d()) throw std::out_of_range("level k must satisfy 1 <= k <= d");
}

std::vector<GroupElement> vertex_stabilizer(const ColoredGraph& g, int v) {
  std::vector<GroupElement> gens;
  for (int e : g.incident(v)) gens.push_back(g.edge(e).color);
  return gens;
}

gf2::Subspace direct_sum(const GraphComplex& gc, int k, int dim) {
  const std::size_t nc = gc.num_chars();
  const auto& cells = gc.cells(dim);
  std::map<std::vector<std::uint32_t>, std::vector<gf2::BitVector>> local;
  gf2::BitMatrix basis(0, cells.size() * nc);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<std::uint32_t> key;
    for (const auto& g : cells[i].stabilizer) key.push_back(g.bits);
    std::sort(key.begin(), key.end());
    auto it = local.find(key);
    if (it == local.end())
      it = local.emplace(key, ring::ak_rel_subspace(gc.d(), k, cells[i].stabilizer).basis_vectors()).first;
    for (const auto& v : it->second) {
      gf2::BitVector row(cells.size() * nc);
      for (auto h : v.support()) row.set(i * nc + h);
      basis.append_row(row);
    }
  }
  // Blocks are disjoint and each block is already reduced, so only the row
  // order needs fixing; row_space does that.
  return gf2::Subspace::row_space(std::move(basis));
}

gf2::BitVector combine(const gf2::Subspace& space, const gf2::BitVector& y) {
  return space.basis().left_multiply(y);
}

}  // namespace

GraphComplex::GraphComplex(const ColoredGraph& g, bool extra_subdivision)
    : source_(g), cache_(std::make_shared<Cache>()) {
  graph::require_valid(g);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    Cell c;
    c.id = g.vertices()[v];
    c.dim = 0;
    c.vertex = static_cast<int>(v);
    c.stabilizer = vertex_stabilizer(g, static_cast<int>(v));
    cells0_.push_back(std::move(c));
  }
  std::map<std::pair<int, int>, int> multiplicity;
  for (const auto& e : g.edges())
    if (e.kind == EdgeKind::Normal) ++multiplicity[std::minmax(e.a, e.b)];

  edge_cells_.resize(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(i);
    int segments = 1;
    if (e.kind == EdgeKind::Circular)
      segments = 3;
    else if (e.kind == EdgeKind::Loop || multiplicity[std::minmax(e.a, e.b)] > 1)
      segments = 2;
    if (extra_subdivision) segments *= 2;

    const int points = e.kind == EdgeKind::Circular ? segments : segments - 1;
    std::vector<int> chain;
    if (e.kind != EdgeKind::Circular) chain.push_back(e.a);
    for (int p = 0; p < points; ++p) {
      Cell c;
      c.id = e.id + ".p" + std::to_string(p);
      c.dim = 0;
      c.edge = static_cast<int>(i);
      c.stabilizer = {e.color};
      chain.push_back(static_cast<int>(cells0_.size()));
      cells0_.push_back(std::move(c));
    }
    if (e.kind != EdgeKind::Circular)
      chain.push_back(e.b);
    else
      chain.push_back(chain.front());
    for (int s = 0; s < segments; ++s) {
      Cell c;
      c.id = segments == 1 ? e.id : e.id + "." + std::to_string(s);
      c.dim = 1;
      c.edge = static_cast<int>(i);
      c.stabilizer = {e.color};
      c.faces = {chain[s], chain[s + 1]};
      edge_cells_[i].push_back(static_cast<int>(cells1_.size()));
      cells1_.push_back(std::move(c));
    }
  }
}

GraphComplex build(const ColoredGraph& g) { return GraphComplex(g); }

std::optional<int> GraphComplex::cell_index(int dim, const std::string& id) const {
  const auto& cs = cells(dim);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

gf2::BitVector GraphComplex::boundary(const gf2::BitVector& chain1) const {
  if (chain1.size() != ambient_dim(1)) throw std::invalid_argument("dimension mismatch in boundary");
  const std::size_t nc = num_chars();
  gf2::BitVector out(ambient_dim(0));
  for (auto pos : chain1.support()) {
    const auto& c = cells1_[pos / nc];
    const auto h = pos % nc;
    out.flip(c.faces[0] * nc + h);
    out.flip(c.faces[1] * nc + h);
  }
  return out;
}

const GraphComplex::Level& GraphComplex::level(int k) const {
  check_level(*this, k);
  std::lock_guard lock(cache_->mu);
  auto& slot = cache_->levels[k];
  if (!slot) {
    auto lv = std::make_unique<Level>();
    lv->c0 = direct_sum(*this, k, 0);
    lv->c1 = direct_sum(*this, k, 1);
    lv->images = gf2::BitMatrix(lv->c1.dim(), ambient_dim(0));
    for (std::size_t r = 0; r < lv->c1.dim(); ++r) lv->images.set_row(r, boundary(lv->c1.basis().row(r)));
    lv->boundary_rank = gf2::rank(lv->images);
    slot = std::move(lv);
  }
  return *slot;
}

gf2::Subspace constrained_space(const GraphComplex& gc, int k, int dim) {
  if (dim != 0 && dim != 1) throw std::out_of_range("dim must be 0 or 1");
  const auto& lv = gc.level(k);
  return dim == 0 ? lv.c0 : lv.c1;
}

BettiK betti_gk(const GraphComplex& gc, int k) {
  const auto& lv = gc.level(k);
  return {lv.c0.dim() - lv.boundary_rank, lv.c1.dim() - lv.boundary_rank};
}

long long euler_characteristic(const ColoredGraph& g) {
  long long edges = 0;
  for (const auto& e : g.edges())
    if (e.kind != EdgeKind::Circular) ++edges;
  return static_cast<long long>(g.num_vertices()) - edges;
}

long long expected_chi_k(const ColoredGraph& g, int k) {
  return -static_cast<long long>(ring::binomial(g.d() - 2, k - 1)) * euler_characteristic(g);
}

bool euler_check(const GraphComplex& gc, int k) {
  auto b = betti_gk(gc, k);
  return static_cast<long long>(b.b0) - static_cast<long long>(b.b1) == expected_chi_k(gc.source(), k);
}

gf2::Subspace cycle_space(const GraphComplex& gc, int k) {
  const auto& lv = gc.level(k);
  auto kernel = gf2::kernel_basis(lv.images.transpose());
  std::vector<gf2::BitVector> cycles;
  for (const auto& y : kernel.basis_vectors()) cycles.push_back(combine(lv.c1, y));
  return gf2::Subspace::span(gc.ambient_dim(1), cycles);
}

gf2::Subspace w_space(const GraphComplex& gc, int k) {
  const auto& g = gc.source();
  std::vector<gf2::BitVector> gens;
  for (const auto& h : Character::all(gc.d())) {
    gf2::BitVector w(gc.ambient_dim(1));
    for (int e : graph::gamma_H(g, h).edges)
      for (int c : gc.edge_cells(e)) w.set(gc.coordinate(c, h));
    if (!w.is_zero()) gens.push_back(std::move(w));
  }
  auto full = gf2::Subspace::span(gc.ambient_dim(1), gens);
  if (k == gc.d()) return full;
  return gf2::intersection(full, gc.level(k).c1);
}

ConstrainedChain iota_k(const GraphComplex& gc, const ring::GradedElement& b) {
  const int k = b.degree() + 1;
  check_level(gc, k);
  if (b.d() != gc.d()) throw std::invalid_argument("rank mismatch");
  const auto omega_b = ring::omega_map(b);
  ConstrainedChain out{k, 1, gf2::BitVector(gc.ambient_dim(1))};
  const auto& cells = gc.cells(1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& color = gc.source().edge(cells[c].edge).color;
    for (const auto& h : Character::all(gc.d()))
      if (ring::char_value(h, color) && omega_b.get(h.index())) out.coords.set(gc.coordinate(c, h));
  }
  return out;
}

TautReport taut_report(const GraphComplex& gc, int k) {
  TautReport r;
  r.k = k;
  r.b1 = betti_gk(gc, k).b1;
  r.expected_b1 = ring::dim_Bk(gc.d(), k - 1);
  r.by_dimension = r.b1 == r.expected_b1;
  r.by_w_space = w_space(gc, k) == cycle_space(gc, k);
  return r;
}

bool is_k_taut(const GraphComplex& gc, int k) {
  auto r = taut_report(gc, k);
  if (r.by_dimension != r.by_w_space)
    throw std::logic_error("tautness tests disagree at level " + std::to_string(k));
  return r.by_dimension;
}

bool is_taut(const GraphComplex& gc) {
  if (gc.d() < 2) throw std::out_of_range("tautness needs d >= 2");
  return is_k_taut(gc, gc.d() - 1);
}

bool all_gamma_connected(const ColoredGraph& g) {
  for (const auto& h : Character::all(g.d()))
    if (graph::betti(g, graph::gamma_H(g, h).edges).b0 != 1) return false;
  return true;
}

ConstrainedChain high_order_witness(const GraphComplex& gc, const std::vector<int>& edges,
                                    const std::vector<int>& vertices) {
  if (edges.size() != vertices.size()) throw std::invalid_argument("one vertex per edge expected");
  const auto& g = gc.source();
  GroupElement product = GroupElement::identity(g.d());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = g.edge(edges[i]);
    if (e.kind == EdgeKind::Circular || (e.a != vertices[i] && e.b != vertices[i]))
      throw std::invalid_argument("vertex " + g.vertices().at(vertices[i]) + " is not on edge " + e.id);
    product = product * e.color;
  }
  if (!product.is_identity()) throw std::invalid_argument("product of the edge colors is not 1");
  const int k = g.d() - 1;
  ConstrainedChain z{k, 0, gf2::BitVector(gc.ambient_dim(0))};
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (const auto& h : Character::all(g.d()))
      if (ring::char_value(h, g.edge(edges[i]).color)) z.coords.flip(gc.coordinate(gc.vertex_cell(vertices[i]), h));
  if (k >= 1 && !gc.level(k).c0.contains(z.coords))
    throw std::logic_error("witness chain is not admissible");
  return z;
}

std::optional<ConstrainedChain> bounding_chain(const GraphComplex& gc, const ConstrainedChain& z, int k) {
  if (z.dim != 0 || z.coords.size() != gc.ambient_dim(0)) throw std::invalid_argument("expected a 0-chain");
  const auto& lv = gc.level(k);
  if (!lv.c0.contains(z.coords)) throw std::invalid_argument("chain is not admissible at this level");
  auto y = gf2::solve(lv.images.transpose(), z.coords);
  if (!y) return std::nullopt;
  return ConstrainedChain{k, 1, combine(lv.c1, *y)};
}

bool h0_class_is_zero(const GraphComplex& gc, const ConstrainedChain& z, int k) {
  return bounding_chain(gc, z, k).has_value();
}

int phi_invariant(const GraphComplex& gc, const ConstrainedChain& z, const std::vector<int>& designated_edges) {
  const auto& g = gc.source();
  const int d = g.d();
  if (!all_gamma_connected(g)) throw std::invalid_argument("phi needs every Gamma_H connected");
  GroupElement product = GroupElement::identity(d);
  for (int e : designated_edges) {
    if (gc.edge_cells(e).size() != 1) throw std::invalid_argument("designated edges must be single cells");
    product = product * g.edge(e).color;
  }
  if (!product.is_identity()) throw std::invalid_argument("designated colors do not multiply to 1");

  auto phi = [&](const gf2::BitVector& c) {
    int total = 0;
    for (int e : designated_edges)
      for (const auto& h : Character::all(d)) total ^= c.get(gc.coordinate(gc.edge_cells(e)[0], h));
    return total;
  };
  for (const auto& cyc : cycle_space(gc, d).basis_vectors())
    if (phi(cyc)) throw std::logic_error("phi is not well defined on cycles");
  auto c = bounding_chain(gc, z, d);
  if (!c) throw std::invalid_argument("chain does not bound at level d");
  return phi(c->coords);
}

int mob_parity(int m, const std::vector<int>& indices) {
  const int k = static_cast<int>(indices.size());
  if (!((m % 2 == 1 && k % 2 == 0) || (m == 2 && k == 2)))
    throw std::invalid_argument("needs m odd and k even, or m = k = 2");
  for (int i = 0; i < k; ++i)
    if (indices[i] < 0 || indices[i] >= m || (i && indices[i] <= indices[i - 1]))
      throw std::invalid_argument("indices must be increasing in [0, m)");

  const auto ladder = graph::mobius_ladder(m, 1);
  const int nv = 2 * m;
  int result = -1;
  for (int parity = 0; parity < 2; ++parity) {
    // All rungs plus every other rim edge: a circuit through every rung.
    std::vector<int> edges;
    for (int i = parity; i < 2 * m; i += 2) edges.push_back(graph::rim_edge(m, i));
    for (int i = 0; i < m; ++i) edges.push_back(graph::rung_edge(m, i));
    gf2::BitVector target(nv);
    for (int i : indices) target.flip(i);
    int answers[2];
    for (int order = 0; order < 2; ++order) {
      std::vector<int> cols = edges;
      if (order) std::reverse(cols.begin(), cols.end());
      gf2::BitMatrix inc(nv, cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& e = ladder.edge(cols[j]);
        inc.flip(e.a, j);
        inc.flip(e.b, j);
      }
      auto c = gf2::solve(inc, target);
      if (!c) throw std::logic_error("no chain with the required boundary");
      int a = 0;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!c->get(j)) continue;
        for (int i : indices)
          if (cols[j] == graph::rung_edge(m, i)) a ^= 1;
      }
      answers[order] = a;
    }
    if (answers[0] != answers[1]) throw std::logic_error("parity depends on the chosen chain");
    result = result < 0 ? answers[0] : result ^ answers[0];
  }
  return result;
}

std::string chain_to_json(const GraphComplex& gc, const ConstrainedChain& c, int indent) {
  nlohmann::json doc;
  doc["k"] = c.k;
  doc["dim"] = c.dim;
  auto entries = nlohmann::json::array();
  const std::size_t nc = gc.num_chars();
  for (auto pos : c.coords.support()) {
    Character h{gc.d(), static_cast<std::uint32_t>(pos % nc + 1)};
    entries.push_back({{"simplex", gc.cells(c.dim)[pos / nc].id}, {"H", h.to_string()}});
  }
  doc["entries"] = std::move(entries);
  return doc.dump(indent);
}

ConstrainedChain chain_from_json(const GraphComplex& gc, const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  ConstrainedChain c;
  c.k = doc.at("k").get<int>();
  std::optional<int> dim;
  if (doc.contains("dim")) dim = doc["dim"].get<int>();
  const auto entries = doc.value("entries", nlohmann::json::array());
  if (!dim) {
    dim = 0;
    for (const auto& e : entries)
      if (!gc.cell_index(0, e.at("simplex").get<std::string>())) dim = 1;
  }
  c.dim = *dim;
  c.coords = gf2::BitVector(gc.ambient_dim(c.dim));
  for (const auto& e : entries) {
    const auto id = e.at("simplex").get<std::string>();
    auto cell = gc.cell_index(c.dim, id);
    if (!cell) throw std::invalid_argument("unknown simplex " + id);
    auto h = Character::from_string(e.at("H").get<std::string>());
    if (h.d != gc.d()) throw std::invalid_argument("character rank mismatch");
    c.coords.flip(gc.coordinate(*cell, h));
  }
  return c;
}

}  // namespace abcover::complex
