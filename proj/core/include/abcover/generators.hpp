#pragma once

#include <string>
#include <vector>

#include "abcover/colored_graph.hpp"

namespace abcover::graph {

// Möbius ladder with n rungs: vertices v0..v{2n-1}, rim edges s_i = {v_i, v_{i+1}}
// at indices 0..2n-1, rungs t_i = {v_i, v_{i+n}} at indices 2n..3n-1. Colors are
// left as the identity.
ColoredGraph mobius_ladder(int n, int d);
inline int rim_edge(int /*n*/, int i) { return i; }
inline int rung_edge(int n, int i) { return 2 * n + i; }

// Generalized Petersen P(n,k): u0..u{n-1}, v0..v{n-1}; edges s_i, t_i, r_i in
// that order (indices i, n+i, 2n+i).
ColoredGraph generalized_petersen(int n, int k, int d);

ColoredGraph make_theta();
ColoredGraph make_k4_d3();
ColoredGraph mobius_d2(int n);

enum class D3Variant { TreeCircuit, FourCircuit };
ColoredGraph mobius_d3_special(int n, D3Variant variant);
ColoredGraph mobius_d3_exceptional4();
// A d = 3 ladder coloring with exactly k rungs colored by the rung product g0 = x3.
ColoredGraph mobius_d3_rungs(int n, int k);
ColoredGraph mobius_d4(int n);
ColoredGraph mobius_d4_alt(int n);
ColoredGraph d3_tree_circuit(int m, int b);
ColoredGraph genpetersen_d3(int n, int k);
ColoredGraph petersen_d5();

// Ladder with the given rung colors; the first rim color (in mask order) that
// yields a valid coloring is used unless `rim0` is given.
ColoredGraph ladder_with_rungs(int d, const std::vector<GroupElement>& rungs,
                               std::optional<GroupElement> rim0 = std::nullopt);

struct FamilyParams {
  int n = 0;
  int m = 0;
  int b = 0;
  int k = 0;
  std::string variant;
};
std::vector<std::string> family_names();
ColoredGraph generate(const std::string& family, const FamilyParams& params);

}  // namespace abcover::graph
