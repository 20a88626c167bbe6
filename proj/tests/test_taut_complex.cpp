#include <doctest.h>

#include "abcover/generators.hpp"
#include "abcover/taut_complex.hpp"

using namespace abcover;
using namespace abcover::complex;
using graph::gamma_H;
using graph::rung_edge;

namespace {

long long chi(const GraphComplex& gc, int k) {
  auto b = betti_gk(gc, k);
  return static_cast<long long>(b.b0) - static_cast<long long>(b.b1);
}

graph::ColoredGraph two_thetas() {
  graph::ColoredGraph g(2);
  auto g1 = GroupElement::from_string("10"), g2 = GroupElement::from_string("01"),
       g3 = GroupElement::from_string("11");
  for (int copy = 0; copy < 2; ++copy) {
    int a = g.add_vertex("a" + std::to_string(copy)), b = g.add_vertex("b" + std::to_string(copy));
    g.add_edge(a, b, g1);
    g.add_edge(a, b, g2);
    g.add_edge(a, b, g3);
  }
  return g;
}

}  // namespace

TEST_CASE("cells") {
  auto k4 = build(graph::make_k4_d3());
  CHECK(k4.cells(0).size() == 4);
  CHECK(k4.cells(1).size() == 6);
  auto theta = build(graph::make_theta());
  CHECK(theta.cells(0).size() == 5);
  CHECK(theta.cells(1).size() == 6);
  graph::ColoredGraph circ(1);
  circ.add_circular(GroupElement::from_string("1"));
  auto c = build(circ);
  CHECK(c.cells(0).size() == 3);
  CHECK(c.cells(1).size() == 3);
}

TEST_CASE("constrained spaces") {
  auto k4 = build(graph::make_k4_d3());
  CHECK(constrained_space(k4, 1, 1).dim() == 6);
  for (const auto& g : {graph::make_k4_d3(), graph::mobius_d4(4), graph::petersen_d5()}) {
    auto gc = build(g);
    std::size_t expect = 0;
    for (const auto& h : Character::all(g.d())) expect += gamma_H(g, h).edges.size();
    CHECK(constrained_space(gc, g.d(), 1).dim() == expect);
    // level d-1: every admissible per-cell vector has even weight and avoids H containing the color
    const int k = g.d() - 1;
    for (const auto& v : constrained_space(gc, k, 1).basis_vectors())
      for (std::size_t cell = 0; cell < gc.cells(1).size(); ++cell) {
        auto color = g.edge(gc.cells(1)[cell].edge).color;
        int weight = 0;
        for (const auto& h : Character::all(g.d())) {
          bool bit = v.get(gc.coordinate(static_cast<int>(cell), h));
          weight += bit;
          if (bit) CHECK(ring::char_value(h, color));
        }
        CHECK(weight % 2 == 0);
      }
  }
  CHECK_THROWS(constrained_space(k4, 1, 2));
  CHECK_THROWS(constrained_space(k4, 4, 1));
}

TEST_CASE("betti numbers of the complex") {
  for (const auto& g : {graph::make_k4_d3(), graph::mobius_d2(4), graph::mobius_d4(5), graph::petersen_d5(),
                        graph::d3_tree_circuit(4, 6)}) {
    auto gc = build(g);
    auto b = graph::betti(g);
    CHECK(betti_gk(gc, 1) == BettiK{std::size_t(b.b1), std::size_t(b.b0)});
    BettiK top;
    for (const auto& h : Character::all(g.d())) {
      auto bh = graph::betti(g, gamma_H(g, h).edges);
      top.b0 += bh.b0;
      top.b1 += bh.b1;
    }
    CHECK(betti_gk(gc, g.d()) == top);
    for (int k = 1; k <= g.d(); ++k) CHECK(euler_check(gc, k));
  }
  CHECK(betti_gk(build(graph::make_k4_d3()), 2) == BettiK{6, 4});
  CHECK(betti_gk(build(graph::petersen_d5()), 4) == BettiK{31, 26});
}

TEST_CASE("euler characteristics") {
  auto k4 = build(graph::make_k4_d3());
  CHECK(chi(k4, 1) == 2);
  CHECK(chi(k4, 2) == 2);
  CHECK(chi(k4, 3) == 0);
  for (int n = 3; n <= 6; ++n) CHECK(chi(build(graph::mobius_d4(n)), 3) == n);
  // d = 2: the binomial vanishes at k = 2
  CHECK(chi(build(graph::mobius_d2(3)), 2) == 0);
  // subdivision does not change homology
  for (const auto& g : {graph::make_theta(), graph::make_k4_d3(), graph::mobius_d4(4)}) {
    GraphComplex plain(g), fine(g, true);
    CHECK(fine.cells(1).size() > plain.cells(1).size());
    for (int k = 1; k <= g.d(); ++k) CHECK(betti_gk(plain, k) == betti_gk(fine, k));
  }
}

TEST_CASE("iota") {
  for (const auto& g : {graph::make_k4_d3(), graph::mobius_d4(4), graph::petersen_d5()}) {
    auto gc = build(g);
    const int d = g.d(), k = d - 1;
    auto z = iota_k(gc, ring::GradedElement::two_power(d, k - 1));
    gf2::BitVector expect(gc.ambient_dim(1));
    for (std::size_t cell = 0; cell < gc.cells(1).size(); ++cell)
      for (const auto& h : Character::all(d))
        if (ring::char_value(h, g.edge(gc.cells(1)[cell].edge).color))
          expect.set(gc.coordinate(static_cast<int>(cell), h));
    CHECK(z.coords == expect);
    CHECK(iota_k(gc, ring::GradedElement(d, k - 1)).coords.is_zero());

    for (int level = 1; level <= d; ++level) {
      std::vector<gf2::BitVector> images;
      auto cycles = cycle_space(gc, level);
      for (auto s : ring::GradedElement::basis_subsets(d, level - 1)) {
        auto c = iota_k(gc, ring::GradedElement::monomial(d, level - 1, s));
        CHECK(cycles.contains(c.coords));
        images.push_back(c.coords);
      }
      CHECK(gf2::Subspace::span(gc.ambient_dim(1), images).dim() == ring::dim_Bk(d, level - 1));
    }
  }
}

TEST_CASE("tautness") {
  CHECK(is_taut(build(graph::make_k4_d3())));
  for (int n = 2; n <= 7; ++n) {
    auto gc = build(graph::mobius_d2(n));
    CHECK(is_k_taut(gc, 1));
    CHECK(is_k_taut(gc, 2) == (n % 2 == 1 || n == 2));
  }
  auto p = build(graph::petersen_d5());
  CHECK(is_taut(p));
  CHECK(is_k_taut(p, 5));
  for (int n = 4; n <= 6; ++n) {
    CHECK(is_k_taut(build(graph::mobius_d4(n)), 4));
    auto alt = build(graph::mobius_d4_alt(n));
    CHECK(is_taut(alt));
    CHECK_FALSE(is_k_taut(alt, 4));
  }
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k <= n - 2; ++k) CHECK(is_taut(build(graph::mobius_d3_rungs(n, k))));
  auto split = build(two_thetas());
  CHECK_FALSE(is_k_taut(split, 1));
  CHECK_FALSE(all_gamma_connected(two_thetas()));
  CHECK(all_gamma_connected(graph::petersen_d5()));
  auto r = taut_report(build(graph::make_k4_d3()), 2);
  CHECK(r.b1 == 4);
  CHECK(r.expected_b1 == 4);
  CHECK(r.by_dimension);
  CHECK(r.by_w_space);
}

TEST_CASE("witness chains") {
  for (int n = 4; n <= 7; ++n) {
    auto g = graph::mobius_d4(n);
    auto gc = build(g);
    std::vector<int> edges, verts;
    for (int i = 1; i < n; ++i) {
      edges.push_back(rung_edge(n, i));
      verts.push_back(i);
    }
    auto z = high_order_witness(gc, edges, verts);
    CHECK_FALSE(z.coords.is_zero());
    CHECK_FALSE(h0_class_is_zero(gc, z, 3));
    CHECK(phi_invariant(gc, z, edges) == 1);
  }
  auto p = graph::petersen_d5();
  auto gp = build(p);
  std::vector<int> taus{5, 6, 7, 8, 9}, vs{5, 6, 7, 8, 9};
  auto z = high_order_witness(gp, taus, vs);
  CHECK(h0_class_is_zero(gp, z, 5));
  CHECK_FALSE(h0_class_is_zero(gp, z, 4));
  CHECK(bounding_chain(gp, z, 5).has_value());
  CHECK(phi_invariant(gp, z, taus) == 1);

  auto zero = high_order_witness(gp, {}, {});
  CHECK(zero.coords.is_zero());
  CHECK(h0_class_is_zero(gp, zero, 4));
  CHECK(phi_invariant(gp, zero, taus) == 0);

  CHECK_THROWS(high_order_witness(gp, {5}, {5, 6}));
  CHECK_THROWS(high_order_witness(gp, {5}, {0}));   // u0 is not on t0
  CHECK_THROWS(high_order_witness(gp, {5}, {5}));   // one color does not multiply to 1
}

TEST_CASE("moebius parity") {
  CHECK(mob_parity(2, {0, 1}) == 1);
  CHECK(mob_parity(5, {0, 2}) == 0);
  CHECK(mob_parity(7, {1, 2, 4, 6}) == 0);
  CHECK(mob_parity(3, {}) == 0);
  CHECK_THROWS(mob_parity(4, {0, 1}));
  CHECK_THROWS(mob_parity(5, {0}));
  CHECK_THROWS(mob_parity(5, {2, 1}));
}

TEST_CASE("chain json") {
  auto gc = build(graph::make_k4_d3());
  auto c = iota_k(gc, ring::GradedElement::two_power(3, 1));
  auto back = chain_from_json(gc, chain_to_json(gc, c));
  CHECK(back.coords == c.coords);
  CHECK(back.dim == 1);
  CHECK(back.k == c.k);
  CHECK_THROWS(chain_from_json(gc, R"({"k": 2, "dim": 1, "entries": [{"simplex": "nope", "H": "100"}]})"));
}
