#include "abcover/generators.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace abcover::graph {

namespace {

GroupElement x(int d, std::initializer_list<int> gens) {
  GroupElement g{d, 0};
  for (int i : gens) g.bits ^= 1u << (i - 1);  // x_1 .. x_d
  return g;
}

void require_range(bool ok, const std::string& what) {
  if (!ok) throw std::out_of_range(what);
}

void tag(ColoredGraph& g, const std::string& family,
         std::initializer_list<std::pair<const char*, int>> params = {}) {
  g.tags()["family"] = family;
  for (const auto& [k, v] : params) g.tags()[k] = std::to_string(v);
}

ColoredGraph checked(ColoredGraph g) {
  require_valid(g);
  return g;
}

// Colors the edges off `circuit` with the nonzero elements of <x1, x2> so that
// no two tree edges at a vertex agree, sets circuit[0] to x3 and completes.
ColoredGraph color_tree_and_circuit(const ColoredGraph& base, const std::vector<int>& circuit) {
  const int d = 3;
  const GroupElement palette[3] = {x(d, {1}), x(d, {2}), x(d, {1, 2})};
  std::vector<bool> on_circuit(base.num_edges(), false);
  for (int e : circuit) on_circuit[e] = true;
  std::vector<std::optional<GroupElement>> fixed(base.num_edges());

  int root = -1;
  for (std::size_t i = 0; i < base.num_edges() && root < 0; ++i)
    if (!on_circuit[i]) root = base.edge(i).a;
  if (root < 0) throw std::invalid_argument("circuit covers the whole graph");
  std::deque<int> queue{root};
  std::vector<bool> seen(base.num_vertices(), false);
  seen[root] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    auto inc = base.incident(v);
    std::uint32_t used = 0;
    for (int e : inc)
      if (fixed[e]) used |= 1u << fixed[e]->bits;
    for (int e : inc) {
      if (on_circuit[e] || fixed[e]) continue;
      for (const auto& c : palette) {
        if (used >> c.bits & 1u) continue;
        fixed[e] = c;
        used |= 1u << c.bits;
        break;
      }
      if (!fixed[e]) throw std::logic_error("tree vertex of degree above three");
      const auto& edge = base.edge(e);
      int w = edge.a == v ? edge.b : edge.a;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  fixed[circuit.front()] = x(d, {3});
  return complete_coloring(base, fixed);
}

}  // namespace

ColoredGraph mobius_ladder(int n, int d) {
  require_range(n >= 1, "ladder needs n >= 1");
  ColoredGraph g(d);
  for (int i = 0; i < 2 * n; ++i) g.add_vertex("v" + std::to_string(i));
  const GroupElement one{d, 0};
  for (int i = 0; i < 2 * n; ++i) g.add_edge(i, (i + 1) % (2 * n), one, "s" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, i + n, one, "t" + std::to_string(i));
  return g;
}

ColoredGraph generalized_petersen(int n, int k, int d) {
  require_range(n >= 3 && k >= 1 && k <= n - 1 && 2 * k != n, "P(n,k) needs 1 <= k < n, n != 2k");
  ColoredGraph g(d);
  for (int i = 0; i < n; ++i) g.add_vertex("u" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  const GroupElement one{d, 0};
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, one, "s" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(n + i, n + (i + k) % n, one, "t" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge(i, n + i, one, "r" + std::to_string(i));
  return g;
}

ColoredGraph mobius_d2(int n) {
  require_range(n >= 1, "mobius-d2 needs n >= 1");
  auto g = mobius_ladder(n, 2);
  const GroupElement g1 = x(2, {1}), g2 = x(2, {2}), g3 = x(2, {1, 2});
  for (int i = 0; i < 2 * n; ++i) g.set_color(rim_edge(n, i), i % 2 == 0 ? g2 : g3);
  for (int i = 0; i < n; ++i) g.set_color(rung_edge(n, i), g1);
  tag(g, "mobius-d2", {{"n", n}});
  return checked(std::move(g));
}

ColoredGraph make_theta() {
  auto g = mobius_d2(1);
  g.tags().clear();
  tag(g, "theta");
  return g;
}

ColoredGraph ladder_with_rungs(int d, const std::vector<GroupElement>& rungs,
                               std::optional<GroupElement> rim0) {
  const int n = static_cast<int>(rungs.size());
  auto base = mobius_ladder(n, d);
  std::vector<std::optional<GroupElement>> fixed(base.num_edges());
  for (int i = 0; i < n; ++i) fixed[rung_edge(n, i)] = rungs[i];
  std::vector<GroupElement> candidates;
  if (rim0)
    candidates.push_back(*rim0);
  else
    for (std::uint32_t c = 1; c < (1u << d); ++c) candidates.push_back({d, c});
  for (const auto& c : candidates) {
    fixed[rim_edge(n, 0)] = c;
    auto g = complete_coloring(base, fixed);
    if (validate(g).empty()) return g;
  }
  throw std::invalid_argument("no rim coloring completes these rungs");
}

ColoredGraph mobius_d3_special(int n, D3Variant variant) {
  if (variant == D3Variant::FourCircuit) {
    require_range(n >= 3, "four-circuit variant needs n >= 3");
    std::vector<GroupElement> rungs(n, x(3, {3}));
    rungs[0] = x(3, {2});
    rungs[1] = (n - 1) % 2 ? x(3, {2, 3}) : x(3, {2});
    auto g = ladder_with_rungs(3, rungs, x(3, {1}));
    tag(g, "mobius-d3-special", {{"n", n}});
    g.tags()["variant"] = "four";
    return checked(std::move(g));
  }
  require_range(n >= 2, "tree-circuit variant needs n >= 2");
  auto base = mobius_ladder(n, 3);
  // One rung plus half the rim: t0, s0 .. s{n-1}.
  std::vector<int> circuit{rung_edge(n, 0)};
  for (int i = 0; i < n; ++i) circuit.push_back(rim_edge(n, i));
  auto g = color_tree_and_circuit(base, circuit);
  tag(g, "mobius-d3-special", {{"n", n}});
  g.tags()["variant"] = "tree";
  return checked(std::move(g));
}

ColoredGraph mobius_d3_exceptional4() {
  std::vector<GroupElement> rungs{x(3, {1, 2, 3}), x(3, {1}), x(3, {2}), x(3, {3})};
  auto g = ladder_with_rungs(3, rungs, x(3, {2}));
  tag(g, "mobius-d3-exceptional4", {{"n", 4}});
  return checked(std::move(g));
}

ColoredGraph mobius_d3_rungs(int n, int k) {
  require_range(n >= 2 && k >= 0 && k <= n - 2, "mobius-d3 needs n >= 2 and 0 <= k <= n-2");
  const int d = 3;
  const GroupElement g0 = x(d, {3});
  // The n - k other rungs avoid g0 and multiply to g0^{1-k}.
  const int r = n - k;
  std::vector<GroupElement> others;
  if (k % 2 == 1) {
    if (r % 2 == 1) others = {x(d, {1}), x(d, {2}), x(d, {1, 2})};
  } else if (r % 2 == 1) {
    others = {x(d, {1}), x(d, {2}), x(d, {1, 2, 3})};
  } else {
    others = {x(d, {1}), x(d, {1, 3})};
  }
  while (static_cast<int>(others.size()) < r) others.push_back(x(d, {1}));
  std::vector<GroupElement> rungs = others;
  rungs.insert(rungs.end(), k, g0);
  auto g = ladder_with_rungs(d, rungs);
  tag(g, "mobius-d3", {{"n", n}, {"k", k}});
  return checked(std::move(g));
}

ColoredGraph mobius_d4(int n) {
  require_range(n >= 3, "mobius-d4 needs n >= 3");
  const int d = 4;
  std::vector<GroupElement> rungs(n, x(d, {3}));
  rungs[n - 3] = x(d, {1});
  rungs[n - 2] = x(d, {2});
  rungs[n - 1] = n % 2 ? x(d, {1, 2, 3}) : x(d, {1, 2});
  auto g = ladder_with_rungs(d, rungs, x(d, {4}));
  tag(g, "mobius-d4", {{"n", n}});
  return checked(std::move(g));
}

ColoredGraph mobius_d4_alt(int n) {
  require_range(n >= 4, "mobius-d4-alt needs n >= 4");
  const int d = 4;
  std::vector<GroupElement> rungs(n, x(d, {4}));
  rungs[0] = x(d, {1});
  rungs[1] = x(d, {2});
  rungs[2] = x(d, {3});
  rungs[3] = (n - 1) % 2 ? x(d, {1, 2, 3, 4}) : x(d, {1, 2, 3});
  auto g = ladder_with_rungs(d, rungs);
  tag(g, "mobius-d4-alt", {{"n", n}});
  return checked(std::move(g));
}

ColoredGraph d3_tree_circuit(int m, int b) {
  require_range(m >= 3 && b >= m, "d3-tree-circuit needs 3 <= m <= b");
  ColoredGraph base(3);
  const GroupElement one{3, 0};
  for (int i = 0; i < m; ++i) base.add_vertex("c" + std::to_string(i));
  for (int i = 0; i < m - 2; ++i) base.add_vertex("f" + std::to_string(i));
  auto fork = [m](int i) { return m + i; };
  // Caterpillar: spine f0 .. f{m-3}; f0 carries leaves c0, c1, the last fork
  // carries the final two leaves, every other fork carries one.
  std::vector<int> circuit;
  for (int i = 0; i < m; ++i)
    circuit.push_back(base.add_edge(i, (i + 1) % m, one, "c" + std::to_string(i) + "c" +
                                                             std::to_string((i + 1) % m)));
  for (int i = 0; i + 1 < m - 2; ++i)
    base.add_edge(fork(i), fork(i + 1), one, "f" + std::to_string(i) + "f" + std::to_string(i + 1));
  for (int leaf = 0; leaf < m; ++leaf) {
    int f = std::clamp(leaf - 1, 0, m - 3);
    base.add_edge(fork(f), leaf, one, "f" + std::to_string(f) + "c" + std::to_string(leaf));
  }
  auto g = color_tree_and_circuit(base, circuit);
  for (int step = m; step < b; ++step) {
    // Lowest-index vertex off the circuit; the circuit vertices come first.
    g = wye_delta(g, m);
  }
  g.tags().clear();
  tag(g, "d3-tree-circuit", {{"m", m}, {"b", b}});
  return checked(std::move(g));
}

ColoredGraph make_k4_d3() {
  auto g = d3_tree_circuit(3, 3);
  g.tags().clear();
  tag(g, "k4");
  return g;
}

ColoredGraph genpetersen_d3(int n, int k) {
  require_range(n >= 3 && k >= 1 && k <= n - 1 && 2 * k != n && std::gcd(n, k) == 1,
                "genpetersen-d3 needs gcd(n,k) = 1, 1 <= k < n, n != 2k");
  const int d = 3;
  auto base = generalized_petersen(n, k, d);
  std::vector<std::optional<GroupElement>> fixed(base.num_edges());
  // Walk the inner rim t0, tk, t2k, ...: first x1x2, then x1, x2 alternately.
  for (int p = 0; p < n; ++p) {
    int edge = n + (p * k) % n;
    fixed[edge] = p == 0 ? x(d, {1, 2}) : (p % 2 ? x(d, {1}) : x(d, {2}));
  }
  fixed[0] = x(d, {3});
  auto g = complete_coloring(base, fixed);
  tag(g, "genpetersen-d3", {{"n", n}, {"k", k}});
  return checked(std::move(g));
}

ColoredGraph petersen_d5() {
  const int d = 5;
  auto g = generalized_petersen(5, 2, d);
  auto xi = [d](int i) { return GroupElement{d, 1u << (((i % 5) + 5) % 5)}; };
  for (int i = 0; i < 5; ++i) {
    g.set_color(i, xi(i));
    g.set_color(5 + i, xi(i - 1) * xi(i + 2));
    g.set_color(10 + i, xi(i - 1) * xi(i));
  }
  tag(g, "petersen-d5");
  return checked(std::move(g));
}

std::vector<std::string> family_names() {
  return {"theta",     "k4",          "mobius-d2",        "mobius-d3-special", "mobius-d3-exceptional4",
          "mobius-d3", "mobius-d4",   "mobius-d4-alt",    "d3-tree-circuit",   "genpetersen-d3",
          "petersen-d5"};
}

ColoredGraph generate(const std::string& family, const FamilyParams& p) {
  if (family == "theta") return make_theta();
  if (family == "k4") return make_k4_d3();
  if (family == "mobius-d2") return mobius_d2(p.n);
  if (family == "mobius-d3-special") {
    if (p.variant == "tree" || p.variant.empty()) return mobius_d3_special(p.n, D3Variant::TreeCircuit);
    if (p.variant == "four") return mobius_d3_special(p.n, D3Variant::FourCircuit);
    throw std::out_of_range("variant must be 'tree' or 'four'");
  }
  if (family == "mobius-d3-exceptional4") return mobius_d3_exceptional4();
  if (family == "mobius-d3") return mobius_d3_rungs(p.n, p.k);
  if (family == "mobius-d4") return mobius_d4(p.n);
  if (family == "mobius-d4-alt") return mobius_d4_alt(p.n);
  if (family == "d3-tree-circuit") return d3_tree_circuit(p.m, p.b);
  if (family == "genpetersen-d3") return genpetersen_d3(p.n, p.k);
  if (family == "petersen-d5") return petersen_d5();
  throw std::invalid_argument("unknown family " + family);
}

}  // namespace abcover::graph
