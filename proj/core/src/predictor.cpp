#include "abcover/predictor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "abcover/enumerate.hpp"
#include "abcover/generators.hpp"
#include "abcover/taut_complex.hpp"

namespace abcover::predict {

using graph::EdgeKind;
using ring::GroupElement;

TwoGroup::TwoGroup(std::vector<int> exponents) : exps_(std::move(exponents)) {
  if (std::any_of(exps_.begin(), exps_.end(), [](int e) { return e <= 0; }))
    throw std::invalid_argument("exponents must be positive");
  std::sort(exps_.rbegin(), exps_.rend());
}

TwoGroup TwoGroup::of(std::initializer_list<std::pair<int, int>> summands) {
  std::vector<int> e;
  for (auto [exp, count] : summands) {
    if (count < 0) throw std::invalid_argument("negative summand count");
    e.insert(e.end(), count, exp);
  }
  return TwoGroup(std::move(e));
}

int TwoGroup::order_log2() const {
  int s = 0;
  for (int e : exps_) s += e;
  return s;
}

int TwoGroup::exponent_log2() const { return exps_.empty() ? 0 : exps_.front(); }

std::string TwoGroup::to_string() const {
  if (exps_.empty()) return "0";
  std::ostringstream out;
  std::size_t i = 0;
  while (i < exps_.size()) {
    std::size_t j = i;
    while (j < exps_.size() && exps_[j] == exps_[i]) ++j;
    if (i) out << " + ";
    out << "Z" << (1LL << exps_[i]);
    if (j - i > 1) out << "^" << (j - i);
    i = j;
  }
  return out.str();
}

std::string Prediction::relation_token() const {
  if (relation == Relation::Split) return "split";
  return "beta_image_2^" + std::to_string(beta_power);
}

std::string Prediction::to_json(int indent) const {
  nlohmann::json doc;
  doc["theorem"] = theorem;
  doc["odd_part"] = "sum_H H1(M_H)";
  doc["coker"] = coker.exponents();
  doc["coker_text"] = coker.to_string();
  doc["relation"] = relation_token();
  doc["applicable"] = applicable;
  return doc.dump(indent);
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

int tag_int(const ColoredGraph& g, const std::string& key) {
  try {
    return std::stoi(g.tag(key));
  } catch (const std::exception&) {
    return -1;
  }
}

std::multiset<std::uint32_t> color_multiset(const ColoredGraph& g) {
  std::multiset<std::uint32_t> s;
  for (const auto& e : g.edges()) s.insert(e.color.bits);
  return s;
}

Prediction beta_image(const std::string& thm, TwoGroup coker, int power) {
  Prediction p;
  p.theorem = thm;
  p.coker = std::move(coker);
  p.relation = Relation::BetaImage;
  p.beta_power = power;
  return p;
}

Prediction split(const std::string& thm, TwoGroup coker) {
  Prediction p;
  p.theorem = thm;
  p.coker = std::move(coker);
  p.relation = Relation::Split;
  return p;
}

std::optional<Prediction> try_8_2(const ColoredGraph& g, int b1, std::vector<std::string>& why) {
  if (!graph::is_unsplittable(g)) {
    why.push_back("8.2: coloring is not unsplittable");
    return std::nullopt;
  }
  auto special = graph::special_circuits(g);
  if (special.empty()) {
    why.push_back("8.2: no special circuit");
    return std::nullopt;
  }
  std::set<std::size_t> lengths;
  for (const auto& s : special) lengths.insert(s.circuit.edges.size());
  if (lengths.size() > 1) throw InconsistentPrediction("special circuits of different lengths");
  const int m = static_cast<int>(*lengths.begin());
  if (m < 3 || m > b1) throw std::logic_error("special circuit length outside [3, b1]");
  return beta_image("8.2", TwoGroup::of({{2, m - 3}, {1, 2 * (b1 - m)}}), 2);
}

std::optional<Prediction> try_8_3(const ColoredGraph& g, std::vector<std::string>& why) {
  const int n = static_cast<int>(g.num_vertices()) / 2;
  if (n < 2 || g.num_vertices() != static_cast<std::size_t>(2 * n) ||
      g.num_edges() != static_cast<std::size_t>(3 * n) || !graph::is_simple(g)) {
    why.push_back("8.3: not a Möbius ladder");
    return std::nullopt;
  }
  const auto ladder = graph::mobius_ladder(n, g.d());
  const auto isos = graph::isomorphisms(ladder, g);
  if (isos.empty()) {
    why.push_back("8.3: not a Möbius ladder");
    return std::nullopt;
  }
  std::optional<Prediction> result;
  for (const auto& iso : isos) {
    std::vector<GroupElement> rungs;
    GroupElement g0 = GroupElement::identity(g.d());
    for (int i = 0; i < n; ++i) {
      rungs.push_back(g.edge(iso.edge_map[graph::rung_edge(n, i)]).color);
      g0 = g0 * rungs.back();
    }
    if (g0.is_identity()) continue;
    const int k = static_cast<int>(std::count(rungs.begin(), rungs.end(), g0));
    auto coker = k == 0 ? TwoGroup::of({{2, n - 2}}) : TwoGroup::of({{2, n - k - 1}, {1, 2 * (k - 1)}});
    if (result && result->coker != coker)
      throw InconsistentPrediction("ladder structures disagree on the rung prediction");
    result = beta_image("8.3", coker, 2);
  }
  if (!result) why.push_back("8.3: product of the rung colors is 1 for every ladder structure");
  return result;
}

std::optional<Prediction> try_tagged(const ColoredGraph& g, const std::string& family,
                                     const ColoredGraph& reference, const std::string& thm, TwoGroup coker,
                                     std::vector<std::string>& why) {
  if (g.tag("family") != family) {
    why.push_back(thm + ": no '" + family + "' provenance tag");
    return std::nullopt;
  }
  if (color_multiset(g) != color_multiset(reference) || g.num_vertices() != reference.num_vertices()) {
    why.push_back(thm + ": colors differ from the tagged example");
    return std::nullopt;
  }
  if (!complex::all_gamma_connected(g)) {
    why.push_back(thm + ": some Gamma_H is disconnected");
    return std::nullopt;
  }
  return split(thm, std::move(coker));
}

}  // namespace

HypothesesUnmet::HypothesesUnmet(std::vector<std::string> why)
    : std::runtime_error("no theorem applies: " + join(why)), reasons(std::move(why)) {}

long long seq_quotient_dim(int d, int b1, int k) {
  if (k < 1 || k > d - 1) throw std::out_of_range("seq_quotient_dim needs 1 <= k <= d-1");
  if (b1 < d) throw std::invalid_argument("seq_quotient_dim needs b1 >= d");
  return static_cast<long long>(ring::binomial(d - 2, k - 1)) * (b1 - 1) -
         static_cast<long long>(ring::binomial(d, k)) + 1;
}

OrderConstraints order_constraints(int d, int b1) {
  if (d < 2 || b1 < d) throw std::invalid_argument("order constraints need b1 >= d >= 2");
  OrderConstraints out;
  out.order_log2 = (1LL << (d - 2)) * (b1 - 5) + d + 1;
  out.exponent_bound_log2 = d - 1;
  long long total = 0;
  for (int k = 1; k <= d - 1; ++k) total += seq_quotient_dim(d, b1, k);
  if (total != out.order_log2) throw std::logic_error("quotient dimensions do not sum to the order");
  return out;
}

bool satisfies_order_constraints(const TwoGroup& g, int d, int b1) {
  auto c = order_constraints(d, b1);
  return g.order_log2() == c.order_log2 && g.exponent_log2() <= c.exponent_bound_log2;
}

Prediction predict(const ColoredGraph& g) {
  graph::require_valid(g);
  std::vector<std::string> why;
  for (const auto& e : g.edges())
    if (e.kind == EdgeKind::Circular) throw HypothesesUnmet({"graph has circular edges"});
  const auto b = graph::betti(g);
  std::vector<Prediction> found;
  const int d = g.d();

  if (d == 2) {
    if (b.b0 == 1)
      found.push_back(beta_image("8.1", TwoGroup::of({{1, b.b1 - 2}}), 1));
    else
      why.push_back("8.1: graph is disconnected");
  } else {
    why.push_back("8.1: d != 2");
  }
  if (d == 3) {
    if (auto p = try_8_2(g, b.b1, why)) found.push_back(*p);
    if (auto p = try_8_3(g, why)) found.push_back(*p);
  } else {
    why.push_back("8.2/8.3: d != 3");
  }
  if (d == 4) {
    const int n = tag_int(g, "n");
    if (n >= 3) {
      auto coker = n == 3 ? TwoGroup::of({{1, 1}}) : TwoGroup::of({{3, 1}, {1, 4 * n - 14}});
      if (auto p = try_tagged(g, "mobius-d4", graph::mobius_d4(n), "8.7", coker, why)) found.push_back(*p);
    } else {
      why.push_back("8.7: no rung count tag n >= 3");
    }
  } else {
    why.push_back("8.7: d != 4");
  }
  if (d == 5) {
    if (auto p = try_tagged(g, "petersen-d5", graph::petersen_d5(), "8.8",
                            TwoGroup::of({{4, 1}, {2, 4}, {1, 2}}), why))
      found.push_back(*p);
  } else {
    why.push_back("8.8: d != 5");
  }

  if (found.empty()) throw HypothesesUnmet(why);
  for (const auto& p : found)
    if (p.coker != found.front().coker)
      throw InconsistentPrediction("theorems " + found.front().theorem + " and " + p.theorem + " disagree");
  if (!satisfies_order_constraints(found.front().coker, d, b.b1))
    throw std::logic_error("prediction violates the order/exponent constraints");
  Prediction out = found.front();
  for (const auto& p : found) out.applicable.push_back(p.theorem);
  return out;
}

TwoGroup times_power(const TwoGroup& x, int e) {
  std::vector<int> out;
  for (int v : x.exponents())
    if (v > e) out.push_back(v - e);
  return TwoGroup(out);
}

TwoGroup quotient_power(const TwoGroup& x, int e) {
  std::vector<int> out;
  if (e < 0) throw std::invalid_argument("e must be non-negative");
  for (int v : x.exponents())
    if (e > 0) out.push_back(std::min(v, e));
  return TwoGroup(out);
}

bool iso_determined(const TwoGroup& a, const TwoGroup& b, int e) {
  if (e < 1) throw std::invalid_argument("e must be at least 1");
  return times_power(a, e) == times_power(b, e) && quotient_power(a, e) == quotient_power(b, e);
}

std::pair<long long, long long> link_cover_dim(int n, int r, int s, int b0L) {
  if (r < 0 || r > s || s > n) throw std::invalid_argument("link_cover_dim needs 0 <= r <= s <= n");
  if (b0L < 0) throw std::invalid_argument("b0(L) must be non-negative");
  const long long dim = static_cast<long long>(b0L) - 1 + 2LL * n - r - s;
  if (dim < 0) throw std::invalid_argument("inputs do not describe a connected cover");
  return {dim, n - s};
}

LinkingMatrix LinkingMatrix::from_off_diagonal(const std::vector<std::vector<int>>& off) {
  const std::size_t n = off.size();
  gf2::BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (off[i].size() != n) throw std::invalid_argument("linking data must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if ((off[i][j] & 1) != (off[j][i] & 1)) throw std::invalid_argument("linking data must be symmetric");
      if (off[i][j] & 1) {
        m.set(i, j);
        m.flip(i, i);
      }
    }
  }
  LinkingMatrix l;
  l.m_ = std::move(m);
  return l;
}

LinkingMatrix LinkingMatrix::from_matrix(const gf2::BitMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("linking matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool row_sum = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.get(i, j) != m.get(j, i)) throw std::invalid_argument("linking matrix must be symmetric");
      if (i != j) row_sum ^= m.get(i, j);
    }
    if (m.get(i, i) != row_sum) throw std::invalid_argument("diagonal must equal the off-diagonal row sum");
  }
  LinkingMatrix l;
  l.m_ = m;
  return l;
}

long long mod2_cover_dim(int b0, int b1, const LinkingMatrix& lam) {
  if (static_cast<int>(lam.size()) != b0) throw std::invalid_argument("linking matrix size must equal b0");
  return static_cast<long long>(b0) + b1 - 3 - static_cast<long long>(lam.rank());
}

LinkingMatrix ladder_lambda(const std::vector<GroupElement>& rung_colors, const GroupElement& g0) {
  const std::size_t m = rung_colors.size();
  if (m < 3) throw std::invalid_argument("ladder_lambda needs at least three rungs");
  std::vector<std::vector<int>> off(m, std::vector<int>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    const int bit = rung_colors[j] != g0 ? 1 : 0;
    off[j][(j + 1) % m] ^= bit;
    off[(j + 1) % m][j] ^= bit;
  }
  return LinkingMatrix::from_off_diagonal(off);
}

}  // namespace abcover::predict
