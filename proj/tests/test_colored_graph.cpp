#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "abcover/enumerate.hpp"
#include "abcover/generators.hpp"
#include "abcover/graph_json.hpp"

using namespace abcover;
using namespace abcover::graph;

namespace {

// Union-find component count over the vertices touched by `edges`,
// plus one per circular edge.
Betti betti_by_hand(const ColoredGraph& g, const std::vector<int>& edges) {
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> used(g.num_vertices(), false);
  int circular = 0, finite = 0;
  for (int e : edges) {
    const auto& ed = g.edge(e);
    if (ed.kind == EdgeKind::Circular) {
      ++circular;
      continue;
    }
    ++finite;
    used[ed.a] = used[ed.b] = true;
    parent[find(ed.a)] = find(ed.b);
  }
  int verts = 0, comps = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (used[v]) {
      ++verts;
      comps += find(static_cast<int>(v)) == static_cast<int>(v);
    }
  return {comps + circular, finite - verts + comps + circular};
}

std::vector<int> all_edges(const ColoredGraph& g) {
  std::vector<int> e(g.num_edges());
  std::iota(e.begin(), e.end(), 0);
  return e;
}

bool has_kind(const std::vector<Violation>& v, const std::string& kind) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == kind; });
}

std::vector<ColoredGraph> families() {
  std::vector<ColoredGraph> out{make_theta(), make_k4_d3(), mobius_d3_exceptional4(), petersen_d5()};
  for (int n = 1; n <= 6; ++n) out.push_back(mobius_d2(n));
  for (int n = 3; n <= 6; ++n) {
    out.push_back(mobius_d4(n));
    out.push_back(mobius_d3_special(n, D3Variant::TreeCircuit));
  }
  for (int m = 3; m <= 5; ++m) out.push_back(d3_tree_circuit(m, m + 1));
  out.push_back(genpetersen_d3(5, 2));
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate(make_theta()).empty());
  CHECK(validate(make_k4_d3()).empty());

  auto k4 = make_k4_d3();
  for (std::size_t e = 0; e < k4.num_edges(); ++e) k4.set_color(e, GroupElement::from_string("100"));
  CHECK(has_kind(validate(k4), "vertex-relation"));

  auto id = make_k4_d3();
  id.set_color(0, GroupElement::identity(3));
  CHECK(has_kind(validate(id), "identity-color"));

  // Dumbbell: two loops joined by a bridge; the bridge color is forced to 1.
  ColoredGraph bell(1);
  int a = bell.add_vertex("a"), b = bell.add_vertex("b");
  auto one = GroupElement::from_string("1");
  bell.add_loop(a, one);
  bell.add_loop(b, one);
  bell.add_edge(a, b, one);
  CHECK(has_kind(validate(bell), "vertex-relation"));

  ColoredGraph path(2);
  path.add_vertex("p");
  CHECK(has_kind(validate(path), "degree"));
  CHECK(has_kind(validate(ColoredGraph(0)), "rank"));

  // colors inside a proper subgroup
  auto theta3 = make_theta();
  theta3.set_d(3);
  for (std::size_t e = 0; e < theta3.num_edges(); ++e) {
    auto c = theta3.edge(e).color;
    theta3.set_color(e, {3, c.bits});
  }
  CHECK(has_kind(validate(theta3), "generation"));
  CHECK_THROWS_AS(require_valid(theta3), std::invalid_argument);
}

TEST_CASE("cycle subgraphs") {
  for (const auto& g : families()) {
    CHECK(validate(g).empty());
    for (const auto& h : Character::all(g.d())) {
      auto c = gamma_H(g, h);
      std::vector<int> deg(g.num_vertices(), 0);
      for (int e : c.edges) {
        CHECK(ring::char_value(h, g.edge(e).color));
        if (g.edge(e).kind != EdgeKind::Circular) {
          ++deg[g.edge(e).a];
          ++deg[g.edge(e).b];
        }
      }
      for (int x : deg) CHECK((x == 0 || x == 2));
    }
  }
  auto m = mobius_d2(4);
  auto rim = gamma_H(m, Character::from_string("01"));
  std::vector<int> expected;
  for (int i = 0; i < 8; ++i) expected.push_back(rim_edge(4, i));
  CHECK(rim.edges == expected);
}

TEST_CASE("edge parity on random subsets") {
  std::mt19937_64 rng(5);
  for (const auto& g : families())
    for (int t = 0; t < 20; ++t) {
      std::vector<int> sel;
      std::uint32_t prod = 0;
      for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (rng() & 1) {
          sel.push_back(static_cast<int>(e));
          prod ^= g.edge(e).color.bits;
        }
      for (const auto& h : Character::all(g.d())) {
        auto c = gamma_H(g, h);
        int count = 0;
        for (int e : sel) count += std::binary_search(c.edges.begin(), c.edges.end(), e);
        CHECK(edge_parity(g, sel, h) == bool(count & 1));
        CHECK(edge_parity(g, sel, h) == ring::char_value(h, {g.d(), prod}));
      }
    }
}

TEST_CASE("betti numbers") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(betti(mobius_ladder(n, 2)) == Betti{1, n + 1});
  }
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {7, 2}, {8, 3}})
    CHECK(betti(generalized_petersen(n, k, 3)) == Betti{1, n + 1});
  CHECK(betti(ColoredGraph(2)) == Betti{0, 0});
  ColoredGraph circ(1);
  circ.add_circular(GroupElement::from_string("1"));
  CHECK(betti(circ) == Betti{1, 1});

  std::mt19937_64 rng(9);
  for (const auto& g : families()) {
    CHECK(betti(g) == betti_by_hand(g, all_edges(g)));
    for (int t = 0; t < 20; ++t) {
      std::vector<int> sel;
      for (std::size_t e = 0; e < g.num_edges(); ++e)
        if (rng() % 3) sel.push_back(static_cast<int>(e));
      CHECK(betti(g, sel) == betti_by_hand(g, sel));
    }
  }
}

TEST_CASE("unsplittable and special circuits") {
  CHECK(is_unsplittable(make_k4_d3()));
  CHECK_FALSE(special_circuits(make_k4_d3()).empty());
  CHECK(special_circuits(make_k4_d3()).front().circuit.edges.size() == 3);

  // Deleting one rim color class of an even ladder leaves two pieces.
  auto split = mobius_d2(4);
  CHECK_FALSE(is_unsplittable(split));

  for (const auto& g : families())
    if (is_unsplittable(g)) CHECK((is_theta(g) || (is_simple(g) && betti(g).b0 == 1)));

  auto gp = genpetersen_d3(5, 2);
  bool outer_rim = false;
  for (const auto& sc : special_circuits(gp)) {
    std::vector<int> rim{0, 1, 2, 3, 4};
    outer_rim = outer_rim || sc.circuit.edges == rim;
  }
  CHECK(outer_rim);

  for (int n = 4; n <= 8; n += 2)
    for (const auto& sc : special_circuits(mobius_d2(n))) CHECK(sc.h.mask != 0b01);
}

TEST_CASE("generators") {
  auto p = petersen_d5();
  CHECK(p.num_vertices() == 10);
  CHECK(p.num_edges() == 15);
  for (const auto& h : Character::all(5)) CHECK(betti(p, gamma_H(p, h).edges).b0 == 1);
  for (int n = 3; n <= 7; ++n) {
    auto g = mobius_d4(n);
    for (const auto& h : Character::all(4)) CHECK(betti(g, gamma_H(g, h).edges).b0 == 1);
  }
  for (int m = 3; m <= 7; ++m)
    for (int b = m; b <= 7; ++b) {
      auto g = d3_tree_circuit(m, b);
      CHECK(validate(g).empty());
      CHECK(betti(g).b1 == b);
      CHECK(is_unsplittable(g));
      auto sc = special_circuits(g);
      CHECK(std::any_of(sc.begin(), sc.end(),
                        [&](const SpecialCircuit& s) { return s.circuit.edges.size() == std::size_t(m); }));
    }
  for (int n = 1; n <= 7; ++n) {
    bool all_connected = true;
    auto g = mobius_d2(n);
    for (const auto& h : Character::all(2)) all_connected = all_connected && betti(g, gamma_H(g, h).edges).b0 == 1;
    CHECK(all_connected == (n % 2 == 1 || n == 2));
  }
  CHECK_THROWS(mobius_d2(0));
  CHECK_THROWS(generate("nonesuch", {}));
  CHECK(generate("petersen-d5", {}).num_edges() == 15);
}

TEST_CASE("wye-delta") {
  auto k4 = make_k4_d3();
  auto sc = special_circuits(k4).front();
  std::vector<bool> on(k4.num_vertices(), false);
  for (int e : sc.circuit.edges) on[k4.edge(e).a] = on[k4.edge(e).b] = true;
  for (std::size_t v = 0; v < k4.num_vertices(); ++v) {
    if (on[v]) continue;
    auto g = wye_delta(k4, static_cast<int>(v));
    CHECK(validate(g).empty());
    CHECK(betti(g).b1 == 4);
    CHECK(is_unsplittable(g));
    auto after = special_circuits(g);
    CHECK(std::any_of(after.begin(), after.end(), [&](const SpecialCircuit& s) { return s.h == sc.h; }));
  }
  auto theta = make_theta();
  auto k4d2 = wye_delta(theta, 0);
  CHECK(validate(k4d2).empty());
  CHECK(k4d2.num_vertices() == 4);
  CHECK(is_simple(k4d2));
  auto only = enumerate_colorings(k4d2, 2, true);
  REQUIRE(only.size() == 1);
  CHECK(colored_isomorphic(only.front(), k4d2));

  ColoredGraph looped(1);
  int a = looped.add_vertex("a"), b = looped.add_vertex("b");
  auto one = GroupElement::from_string("1");
  looped.add_loop(a, one);
  looped.add_loop(b, one);
  looped.add_edge(a, b, one);
  CHECK_THROWS(wye_delta(looped, 0));
}

TEST_CASE("json") {
  for (const auto& g : families()) CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK_THROWS_AS(graph_from_json("{"), ParseError);
  CHECK_THROWS_AS(graph_from_json("[]"), ParseError);
  CHECK_THROWS_AS(graph_from_json(R"({"d": 2, "vertices": ["a"], "edges": [{"id": "e", "ends": ["a", "z"], "color": "10"}]})"),
                  ParseError);
  CHECK_THROWS_AS(graph_from_json(R"({"d": 2, "vertices": ["a"], "edges": [{"id": "e", "ends": {"loop": "a"}, "color": "101"}]})"),
                  ParseError);
  auto g = graph_from_json(R"({"d": 1, "vertices": [], "edges": [{"id": "c", "ends": "circular", "color": "1"}]})");
  CHECK(g.num_edges() == 1);
  CHECK(g.edge(0).kind == EdgeKind::Circular);
}

TEST_CASE("automorphisms and enumeration") {
  CHECK(automorphisms(mobius_ladder(2, 3)).size() == 24);  // the 2-rung ladder is K4
  CHECK(automorphisms(make_k4_d3()).size() == 24);
  CHECK(automorphisms(petersen_d5()).size() == 120);
  CHECK(enumerate_colorings(make_k4_d3(), 3, true).size() == 1);
  CHECK(enumerate_colorings(make_theta(), 2, true).size() == 1);
  // Raw count on the theta: ordered triples of distinct nontrivial elements.
  CHECK(enumerate_colorings(make_theta(), 2, false).size() == 6);

  ColoredGraph bell(2);
  int a = bell.add_vertex("a"), b = bell.add_vertex("b");
  bell.add_loop(a, GroupElement::identity(2));
  bell.add_loop(b, GroupElement::identity(2));
  bell.add_edge(a, b, GroupElement::identity(2));
  for (int d = 1; d <= 3; ++d) CHECK(enumerate_colorings(bell, d, false).empty());
  CHECK_THROWS(enumerate_colorings(make_theta(), 0, true));
}
