#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abcover/colored_graph.hpp"
#include "abcover/gf2.hpp"

namespace abcover::predict {

using graph::ColoredGraph;

// Finite abelian 2-group as a multiset of exponents e (summands Z/2^e),
// kept sorted in decreasing order.
class TwoGroup {
 public:
  TwoGroup() = default;
  explicit TwoGroup(std::vector<int> exponents);
  static TwoGroup of(std::initializer_list<std::pair<int, int>> summands);  // {exponent, count}

  const std::vector<int>& exponents() const { return exps_; }
  int order_log2() const;
  int exponent_log2() const;
  bool is_trivial() const { return exps_.empty(); }
  std::string to_string() const;  // e.g. "Z16 + Z4^4 + Z2^2", "0"

  bool operator==(const TwoGroup&) const = default;

 private:
  std::vector<int> exps_;
};

enum class Relation { Split, BetaImage };

struct Prediction {
  std::string theorem;
  std::vector<std::string> applicable;  // all theorems whose hypotheses hold
  TwoGroup coker;
  Relation relation = Relation::Split;
  int beta_power = 0;  // the 2^power in the beta-image relation
  std::string relation_token() const;
  std::string to_json(int indent = -1) const;
};

struct HypothesesUnmet : std::runtime_error {
  std::vector<std::string> reasons;
  explicit HypothesesUnmet(std::vector<std::string> why);
};

struct InconsistentPrediction : std::logic_error {
  using std::logic_error::logic_error;
};

long long seq_quotient_dim(int d, int b1, int k);

struct OrderConstraints {
  long long order_log2 = 0;
  int exponent_bound_log2 = 0;
};
OrderConstraints order_constraints(int d, int b1);
bool satisfies_order_constraints(const TwoGroup& g, int d, int b1);

Prediction predict(const ColoredGraph& g);

TwoGroup times_power(const TwoGroup& x, int e);     // 2^e X
TwoGroup quotient_power(const TwoGroup& x, int e);  // X / 2^e X
bool iso_determined(const TwoGroup& a, const TwoGroup& b, int e);

std::pair<long long, long long> link_cover_dim(int n, int r, int s, int b0L);

class LinkingMatrix {
 public:
  // Symmetric off-diagonal data; the diagonal is filled with row sums.
  static LinkingMatrix from_off_diagonal(const std::vector<std::vector<int>>& offdiag);
  static LinkingMatrix from_matrix(const gf2::BitMatrix& m);  // checks the invariants

  std::size_t size() const { return m_.rows(); }
  bool get(std::size_t i, std::size_t j) const { return m_.get(i, j); }
  const gf2::BitMatrix& matrix() const { return m_; }
  std::size_t rank() const { return gf2::rank(m_); }

 private:
  gf2::BitMatrix m_;
};

long long mod2_cover_dim(int b0, int b1, const LinkingMatrix& lam);
LinkingMatrix ladder_lambda(const std::vector<ring::GroupElement>& rung_colors, const ring::GroupElement& g0);

}  // namespace abcover::predict
