#include <doctest.h>

#include <algorithm>
#include <map>

#include "abcover/generators.hpp"
#include "abcover/predictor.hpp"

using namespace abcover::predict;
using abcover::ring::GroupElement;
namespace graph = abcover::graph;
namespace gf2 = abcover::gf2;

namespace {

// Multiplicity table of a 2-group, straight from the exponent list.
std::map<int, int> counts(const TwoGroup& g) {
  std::map<int, int> m;
  for (int e : g.exponents()) ++m[e];
  return m;
}

// Number of elements of order dividing 2^j: 2^{sum min(e, j)}.
int log_torsion(const TwoGroup& g, int j) {
  int s = 0;
  for (int e : g.exponents()) s += std::min(e, j);
  return s;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("two-groups") {
  auto g = TwoGroup::of({{4, 1}, {2, 4}, {1, 2}});
  CHECK(g.to_string() == "Z16 + Z4^4 + Z2^2");
  CHECK(g.order_log2() == 14);
  CHECK(g.exponent_log2() == 4);
  CHECK(TwoGroup().to_string() == "0");
  CHECK(TwoGroup({1, 3, 1}) == TwoGroup({3, 1, 1}));
  CHECK(TwoGroup::of({{2, 0}}).is_trivial());
  CHECK_THROWS(TwoGroup({0}));
  CHECK_THROWS(TwoGroup::of({{1, -1}}));

  // 2^e X and X / 2^e X against the torsion counts of the summands
  for (const auto& x : {g, TwoGroup({3, 1}), TwoGroup({5, 5, 2}), TwoGroup()})
    for (int e = 0; e <= 5; ++e) {
      auto t = times_power(x, e), q = quotient_power(x, e);
      CHECK(t.order_log2() + q.order_log2() == x.order_log2());
      CHECK(q.order_log2() == log_torsion(x, e));
      for (int ex : q.exponents()) CHECK(ex <= e);
    }
  CHECK(counts(times_power(g, 1)) == std::map<int, int>{{3, 1}, {1, 4}});
}

TEST_CASE("isomorphism determination") {
  CHECK(iso_determined(TwoGroup({2, 1}), TwoGroup({2, 1}), 1));
  CHECK_FALSE(iso_determined(TwoGroup({2}), TwoGroup({1, 1}), 1));
  for (int e = 1; e <= 4; ++e) CHECK(iso_determined(TwoGroup({3, 1}), TwoGroup({3, 1}), e));
  CHECK_THROWS(iso_determined(TwoGroup(), TwoGroup(), 0));
}

TEST_CASE("quotient dimensions") {
  CHECK(seq_quotient_dim(3, 3, 1) == 0);
  CHECK(seq_quotient_dim(3, 3, 2) == 0);
  std::vector<long long> petersen;
  for (int k = 1; k <= 4; ++k) petersen.push_back(seq_quotient_dim(5, 6, k));
  CHECK(petersen == std::vector<long long>{1, 6, 6, 1});
  for (int d = 2; d <= 6; ++d)
    for (int b1 = d; b1 <= 12; ++b1) {
      CHECK(seq_quotient_dim(d, b1, d - 1) == b1 - d);
      long long total = 0;
      for (int k = 1; k <= d - 1; ++k) total += seq_quotient_dim(d, b1, k);
      CHECK(total == order_constraints(d, b1).order_log2);
    }
  CHECK_THROWS(seq_quotient_dim(3, 3, 3));
  CHECK_THROWS(seq_quotient_dim(3, 2, 1));
}

TEST_CASE("order and exponent constraints") {
  for (int b1 = 2; b1 <= 9; ++b1) CHECK(order_constraints(2, b1).order_log2 == b1 - 2);
  CHECK(order_constraints(5, 6).order_log2 == 14);
  CHECK(order_constraints(5, 6).exponent_bound_log2 == 4);
  for (int n = 3; n <= 9; ++n) CHECK(order_constraints(4, n + 1).order_log2 == 4 * n - 11);
  CHECK(satisfies_order_constraints(TwoGroup::of({{4, 1}, {2, 4}, {1, 2}}), 5, 6));
  CHECK_FALSE(satisfies_order_constraints(TwoGroup::of({{5, 1}, {2, 3}, {1, 1}}), 5, 6));
  CHECK_THROWS(order_constraints(1, 3));
}

TEST_CASE("predictions") {
  auto k4 = predict(graph::make_k4_d3());
  CHECK(k4.coker.is_trivial());
  CHECK(contains(k4.applicable, "8.2"));

  auto p = predict(graph::petersen_d5());
  CHECK(p.coker == TwoGroup::of({{4, 1}, {2, 4}, {1, 2}}));
  const std::string expected =
      R"j({"applicable":["8.8"],"coker":[4,2,2,2,2,1,1],"coker_text":"Z16 + Z4^4 + Z2^2",)j"
      R"j("odd_part":"sum_H H1(M_H)","relation":"split","theorem":"8.8"})j";
  CHECK(p.to_json() == expected);

  CHECK(predict(graph::mobius_d4(5)).coker == TwoGroup::of({{3, 1}, {1, 6}}));
  CHECK(predict(graph::mobius_d4(3)).coker == TwoGroup::of({{1, 1}}));
  for (int n = 4; n <= 8; ++n)
    CHECK(predict(graph::mobius_d4(n)).coker == TwoGroup::of({{3, 1}, {1, 4 * n - 14}}));

  for (int n = 1; n <= 6; ++n) {
    auto d2 = predict(graph::mobius_d2(n));
    CHECK(d2.theorem == "8.1");
    CHECK(d2.relation_token() == "beta_image_2^1");
    CHECK(d2.coker == TwoGroup::of({{1, n - 1}}));
  }

  for (int m = 3; m <= 6; ++m)
    for (int b = m; b <= 7; ++b) {
      auto r = predict(graph::d3_tree_circuit(m, b));
      CHECK(r.coker == TwoGroup::of({{2, m - 3}, {1, 2 * (b - m)}}));
      CHECK(r.relation_token() == "beta_image_2^2");
    }

  for (int n = 3; n <= 7; ++n)
    for (int k = 0; k <= n - 2; ++k) {
      auto r = predict(graph::mobius_d3_rungs(n, k));
      auto expect = k == 0 ? TwoGroup::of({{2, n - 2}}) : TwoGroup::of({{2, n - k - 1}, {1, 2 * (k - 1)}});
      CHECK(r.coker == expect);
      CHECK(contains(r.applicable, "8.3"));
    }
}

TEST_CASE("unmet hypotheses") {
  CHECK_THROWS_AS(predict(graph::mobius_d4_alt(5)), HypothesesUnmet);
  auto untagged = graph::mobius_d4(5);
  untagged.tags().clear();
  CHECK_THROWS_AS(predict(untagged), HypothesesUnmet);
  graph::ColoredGraph circ(1);
  circ.add_circular(GroupElement::from_string("1"));
  try {
    predict(circ);
    FAIL("expected HypothesesUnmet");
  } catch (const HypothesesUnmet& e) {
    CHECK_FALSE(e.reasons.empty());
  }
  CHECK_THROWS_AS(predict(graph::mobius_ladder(3, 3)), std::invalid_argument);
}

TEST_CASE("cover dimensions") {
  for (int b0L = 1; b0L <= 4; ++b0L) {
    CHECK(link_cover_dim(0, 0, 0, b0L) == std::pair<long long, long long>{b0L - 1, 0});
    for (int n = 1; n <= 4; ++n)
      CHECK(link_cover_dim(n, n, n, b0L) == std::pair<long long, long long>{b0L - 1, 0});
  }
  CHECK(link_cover_dim(1, 0, 0, 2) == std::pair<long long, long long>{3, 1});
  CHECK_THROWS(link_cover_dim(1, 1, 0, 2));
  CHECK_THROWS(link_cover_dim(1, 0, 0, -1));

  for (int b1 = 2; b1 <= 8; ++b1)
    CHECK(mod2_cover_dim(1, b1, LinkingMatrix::from_off_diagonal({{0}})) == b1 - 2);

  std::vector<std::vector<int>> off(6, std::vector<int>(6, 0));
  off[0][1] = off[1][0] = 1;
  off[2][3] = off[3][2] = 1;
  auto lam = LinkingMatrix::from_off_diagonal(off);
  CHECK(lam.rank() == 2);
  CHECK(mod2_cover_dim(6, 6, lam) == 7);
  CHECK_THROWS(mod2_cover_dim(5, 6, lam));
  CHECK_THROWS(LinkingMatrix::from_matrix(gf2::BitMatrix::identity(3)));
  off[0][1] = 0;
  CHECK_THROWS(LinkingMatrix::from_off_diagonal(off));
}

TEST_CASE("ladder linking matrices") {
  const GroupElement g0 = GroupElement::from_string("001"), h = GroupElement::from_string("100");
  auto tri = ladder_lambda({h, h, h}, g0);
  CHECK(tri.rank() == 2);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK_FALSE(tri.get(i, i));
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(tri.get(i, j));
  }
  auto one = ladder_lambda({g0, h, h}, g0);
  CHECK(one.rank() == 2);
  CHECK_FALSE(one.get(0, 1));
  CHECK(one.get(0, 0));
  for (int m = 3; m <= 9; m += 2)
    for (int k = 0; k <= m; ++k) {
      std::vector<GroupElement> rungs(m, h);
      for (int i = 0; i < k; ++i) rungs[i] = g0;
      auto lam = ladder_lambda(rungs, g0);
      CHECK(static_cast<int>(lam.rank()) == m - k - (k == 0));
    }
  CHECK_THROWS(ladder_lambda({h, h}, g0));
}
