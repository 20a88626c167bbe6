#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "abcover/colored_graph.hpp"
#include "abcover/gf2.hpp"
#include "abcover/graded.hpp"

namespace abcover::complex {

using graph::ColoredGraph;
using ring::Character;
using ring::GroupElement;

struct Cell {
  std::string id;
  int dim = 0;
  std::vector<GroupElement> stabilizer;  // generators of G_sigma
  int vertex = -1;                       // original vertex, for 0-cells that are vertices
  int edge = -1;                         // source edge, for cells inside an edge
  std::array<int, 2> faces{-1, -1};      // 0-cell indices, for 1-cells
};

// A chain in C'_dim(Gamma|k); coordinate (cell, H) sits at cell * (2^d - 1) + H.index().
struct ConstrainedChain {
  int k = 0;
  int dim = 0;
  gf2::BitVector coords;
};

class GraphComplex {
 public:
  // `extra_subdivision` splits every cell once more; homology is unchanged.
  explicit GraphComplex(const ColoredGraph& g, bool extra_subdivision = false);

  const ColoredGraph& source() const { return source_; }
  int d() const { return source_.d(); }
  std::size_t num_chars() const { return ring::num_characters(d()); }

  const std::vector<Cell>& cells(int dim) const { return dim == 0 ? cells0_ : cells1_; }
  std::size_t ambient_dim(int dim) const { return cells(dim).size() * num_chars(); }
  std::size_t coordinate(int cell, const Character& h) const { return cell * num_chars() + h.index(); }
  // 1-cells making up an edge of the source graph, in order along the edge.
  const std::vector<int>& edge_cells(int edge) const { return edge_cells_[edge]; }
  int vertex_cell(int vertex) const { return vertex; }
  std::optional<int> cell_index(int dim, const std::string& id) const;

  gf2::BitVector boundary(const gf2::BitVector& chain1) const;

  struct Level {
    gf2::Subspace c0;
    gf2::Subspace c1;
    gf2::BitMatrix images;  // row i = boundary of basis row i of c1
    std::size_t boundary_rank = 0;
  };
  const Level& level(int k) const;

 private:
  ColoredGraph source_;
  std::vector<Cell> cells0_;
  std::vector<Cell> cells1_;
  std::vector<std::vector<int>> edge_cells_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

GraphComplex build(const ColoredGraph& g);

gf2::Subspace constrained_space(const GraphComplex& gc, int k, int dim);

struct BettiK {
  std::size_t b0 = 0;
  std::size_t b1 = 0;
  bool operator==(const BettiK&) const = default;
};
BettiK betti_gk(const GraphComplex& gc, int k);

long long euler_characteristic(const ColoredGraph& g);  // V - E, circular edges excluded
long long expected_chi_k(const ColoredGraph& g, int k);
bool euler_check(const GraphComplex& gc, int k);

gf2::Subspace cycle_space(const GraphComplex& gc, int k);  // Z'_1(Gamma|k)
gf2::Subspace w_space(const GraphComplex& gc, int k);      // W(Gamma|k)

ConstrainedChain iota_k(const GraphComplex& gc, const ring::GradedElement& b);

struct TautReport {
  int k = 0;
  std::size_t b1 = 0;
  std::size_t expected_b1 = 0;  // dim B_{k-1}
  bool by_dimension = false;
  bool by_w_space = false;
};
TautReport taut_report(const GraphComplex& gc, int k);
bool is_k_taut(const GraphComplex& gc, int k);  // throws std::logic_error if the two tests disagree
bool is_taut(const GraphComplex& gc);
bool all_gamma_connected(const ColoredGraph& g);

ConstrainedChain high_order_witness(const GraphComplex& gc, const std::vector<int>& edges,
                                    const std::vector<int>& vertices);
bool h0_class_is_zero(const GraphComplex& gc, const ConstrainedChain& z, int k);
// Some c in C'_1(Gamma|k) with boundary z, or nullopt.
std::optional<ConstrainedChain> bounding_chain(const GraphComplex& gc, const ConstrainedChain& z, int k);
int phi_invariant(const GraphComplex& gc, const ConstrainedChain& z, const std::vector<int>& designated_edges);

int mob_parity(int m, const std::vector<int>& indices);

std::string chain_to_json(const GraphComplex& gc, const ConstrainedChain& c, int indent = -1);
ConstrainedChain chain_from_json(const GraphComplex& gc, const std::string& text);

}  // namespace abcover::complex
