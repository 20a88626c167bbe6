#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "abcover/group_ring.hpp"

using namespace abcover;
using namespace abcover::oracle;
using ring::GroupElement;

namespace {

GroupElement x(int d, int i) { return GroupElement::generator(d, i); }

// Character sum computed straight from the definition.
Integer eps_by_hand(std::uint32_t mask, const GroupRingElement& a) {
  Integer s = 0;
  for (std::uint32_t g = 0; g < (1u << a.d()); ++g)
    s += (std::popcount(mask & g) & 1) ? Integer(-a[g]) : a[g];
  return s;
}

bool in_jk_by_hand(const GroupRingElement& a, int k) {
  Integer mod = Integer(1) << k;
  for (std::uint32_t h = 0; h < (1u << a.d()); ++h)
    if (eps_by_hand(h, a) % mod != 0) return false;
  return true;
}

GroupRingElement random_element(std::mt19937_64& rng, int d, int lo = -8, int hi = 8) {
  std::uniform_int_distribution<int> coef(lo, hi);
  GroupRingElement a(d);
  for (std::uint32_t g = 0; g < (1u << d); ++g) a[g] = coef(rng);
  return a;
}

std::vector<Integer> coords(const GroupRingElement& a) { return a.coeffs(); }

}  // namespace

TEST_CASE("character sums") {
  const int d = 3;
  for (std::uint32_t g = 0; g < 8; ++g) {
    auto basis = GroupRingElement::basis({d, g});
    for (std::uint32_t h = 0; h < 8; ++h) {
      auto e = eps(h, basis);
      CHECK((e == 1 || e == -1));
      auto om = GroupRingElement::one_minus({d, g});
      CHECK(eps(h, om) == ((std::popcount(h & g) & 1) ? 2 : 0));
    }
    CHECK(eps(0u, GroupRingElement::one_minus({d, g})) == 0);
  }
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    auto a = random_element(rng, 4);
    for (std::uint32_t h = 0; h < 16; ++h) CHECK(eps(h, a) == eps_by_hand(h, a));
  }
  CHECK_THROWS(eps(8u, GroupRingElement(3)));
}

TEST_CASE("J^k lattices") {
  for (int d = 0; d <= 4; ++d) {
    CHECK(jk_lattice(d, 0).index() == 1);
    for (int k = 0; k <= d + 2; ++k) {
      auto lat = jk_lattice(d, k);
      CHECK(lat.rank() == (std::size_t{1} << d));
      int e = 0;
      for (int l = 0; l <= d; ++l) e += static_cast<int>(ring::binomial(d, l)) * std::max(k - l, 0);
      CHECK(lat.index() == (Integer(1) << e));
      for (const auto& b : jk_basis(d, k)) CHECK(in_jk_by_hand(b, k));
    }
  }
  CHECK(jk_lattice(1, 1).index() == 2);
}

TEST_CASE("membership examples") {
  for (int d = 1; d <= 4; ++d)
    for (int k = 0; k <= 5; ++k) CHECK(jk_member(GroupRingElement::scalar(d, Integer(1) << k), k));
  auto om = GroupRingElement::one_minus(x(1, 0));
  CHECK(jk_member(om, 1));
  CHECK_FALSE(jk_member(om, 2));
  for (int d = 2; d <= 4; ++d) {
    auto p = GroupRingElement::one_minus(x(d, 0)) * GroupRingElement::one_minus(x(d, 1));
    CHECK(jk_member(p, 2));
  }
}

TEST_CASE("membership algorithms agree with the definition") {
  std::mt19937_64 rng(2);
  for (int d = 1; d <= 4; ++d)
    for (int t = 0; t < 60; ++t) {
      auto a = random_element(rng, d);
      // push some samples into deep powers
      if (t % 3 == 0) a = a * GroupRingElement::one_minus(x(d, 0)) * GroupRingElement::one_minus(x(d, d - 1));
      for (int k = 0; k <= d + 1; ++k) {
        bool expect = in_jk_by_hand(a, k);
        CHECK(jk_member_by_characters(a, k) == expect);
        CHECK(jk_member_by_lattice(a, k) == expect);
      }
    }
}

TEST_CASE("Hermite form is canonical") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    int d = 1 + t % 3;
    std::vector<std::vector<Integer>> gens;
    for (int i = 0; i < 5; ++i) gens.push_back(coords(random_element(rng, d, -5, 5)));
    auto a = IntegerLattice::generated_by(std::size_t{1} << d, gens);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    // add integer combinations of the generators
    auto mix = gens[0];
    for (std::size_t j = 0; j < mix.size(); ++j) mix[j] = 3 * gens[0][j] - 2 * gens[1][j];
    shuffled.push_back(mix);
    CHECK(IntegerLattice::generated_by(std::size_t{1} << d, shuffled) == a);
    for (std::size_t i = 1; i < a.pivots().size(); ++i) CHECK(a.pivots()[i - 1] < a.pivots()[i]);
    for (std::size_t i = 0; i < a.rank(); ++i) {
      auto p = a.pivots()[i];
      CHECK(a.basis()[i][p] > 0);
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(a.basis()[j][p] >= 0);
        CHECK(a.basis()[j][p] < a.basis()[i][p]);
      }
    }
    for (const auto& g : gens) CHECK(a.contains(g));
  }
}

TEST_CASE("augmentation powers") {
  for (int d = 1; d <= 3; ++d)
    for (int k = 1; k <= 3; ++k) {
      auto ik = ik_lattice(d, k), next = ik_lattice(d, k + 1);
      std::vector<std::vector<Integer>> doubled;
      for (auto row : ik.basis()) {
        for (auto& c : row) c *= 2;
        doubled.push_back(row);
      }
      CHECK(next.contains(IntegerLattice::generated_by(ik.ambient_dim(), doubled)));
      auto scalar = IntegerLattice::generated_by(
          ik.ambient_dim(), {coords(GroupRingElement::scalar(d, Integer(1) << k))});
      CHECK(lattice_sum(ik, scalar) == jk_lattice(d, k));
      CHECK(ik.rank() + 1 == ik.ambient_dim());
    }
}

TEST_CASE("graded classes") {
  for (int d = 1; d <= 4; ++d) {
    for (int k = 0; k <= 4; ++k)
      CHECK(graded_class(GroupRingElement::scalar(d, Integer(1) << k), k) ==
            ring::GradedElement::two_power(d, k));
    for (std::uint32_t g = 0; g < (1u << d); ++g)
      CHECK(graded_class(GroupRingElement::one_minus({d, g}), 1) == ring::omega({d, g}));
  }
  CHECK_THROWS(graded_class(GroupRingElement::one_minus(x(2, 0)), 2));

  // Multiplicativity on random members built from basis products.
  std::mt19937_64 rng(4);
  for (int d = 1; d <= 3; ++d)
    for (int t = 0; t < 20; ++t) {
      int k = rng() % 3, l = rng() % 3;
      auto bk = jk_basis(d, k), bl = jk_basis(d, l);
      GroupRingElement a(d), b(d);
      std::uniform_int_distribution<int> c(-3, 3);
      for (const auto& e : bk) a += e.scaled(c(rng));
      for (const auto& e : bl) b += e.scaled(c(rng));
      CHECK(graded_class(a * b, k + l) == ring::graded_mul(graded_class(a, k), graded_class(b, l)));
    }
}
