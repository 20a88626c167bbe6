#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abcover/colored_graph.hpp"

namespace abcover::graph {

// Structure-preserving bijection a -> b: vertex_map[v] and edge_map[e] give
// images in b. Colors are ignored.
struct Isomorphism {
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

std::vector<Isomorphism> isomorphisms(const ColoredGraph& a, const ColoredGraph& b,
                                      std::size_t limit = 0);
inline std::vector<Isomorphism> automorphisms(const ColoredGraph& g) { return isomorphisms(g, g); }

// Colors relabeled by the basis change sending independent colors, in order of
// first appearance, to x1, x2, ...; the lexicographically least image under Aut(G).
std::vector<std::uint32_t> relabel_colors(const std::vector<std::uint32_t>& colors);

// Least relabeled color sequence over all automorphisms of the underlying graph.
std::vector<std::uint32_t> canonical_coloring(const ColoredGraph& g,
                                              const std::vector<Isomorphism>& autos);

// Same colored graph up to Aut(G) x graph isomorphism.
bool colored_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

inline constexpr std::size_t kMaxEnumerationEdges = 24;

std::vector<ColoredGraph> enumerate_colorings(const ColoredGraph& shape, int d, bool up_to_symmetry);

}  // namespace abcover::graph
