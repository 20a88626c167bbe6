#include "abcover/group_ring.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

namespace abcover::oracle {

namespace {

void same_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("rank mismatch");
}

std::vector<Integer> as_vector(const GroupRingElement& x) { return x.coeffs(); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

GroupRingElement::GroupRingElement(int d) : d_(d) {
  if (d < 0 || d > 12) throw std::invalid_argument("rank out of range for group ring");
  coeffs_.assign(std::size_t{1} << d, Integer(0));
}

GroupRingElement GroupRingElement::scalar(int d, const Integer& c) {
  GroupRingElement x(d);
  x.coeffs_[0] = c;
  return x;
}

GroupRingElement GroupRingElement::basis(const ring::GroupElement& g) {
  GroupRingElement x(g.d);
  x.coeffs_[g.bits] = 1;
  return x;
}

GroupRingElement GroupRingElement::one_minus(const ring::GroupElement& g) {
  return scalar(g.d, 1) - basis(g);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  same_rank(d_, o.d_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  same_rank(d_, o.d_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  same_rank(a.d_, b.d_);
  GroupRingElement out(a.d_);
  const std::size_t n = a.coeffs_.size();
  for (std::size_t g = 0; g < n; ++g) {
    if (a.coeffs_[g] == 0) continue;
    for (std::size_t h = 0; h < n; ++h)
      if (b.coeffs_[h] != 0) out.coeffs_[g ^ h] += a.coeffs_[g] * b.coeffs_[h];
  }
  return out;
}

GroupRingElement GroupRingElement::scaled(const Integer& c) const {
  GroupRingElement out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

Integer eps(std::uint32_t mask, const GroupRingElement& x) {
  if (mask >= (1u << x.d())) throw std::invalid_argument("rank mismatch");
  Integer total = 0;
  for (std::uint32_t g = 0; g < x.coeffs().size(); ++g) {
    if (std::popcount(mask & g) & 1)
      total -= x[g];
    else
      total += x[g];
  }
  return total;
}

IntegerLattice IntegerLattice::generated_by(std::size_t ambient_dim,
                                            const std::vector<std::vector<Integer>>& generators) {
  IntegerLattice l(ambient_dim);
  for (const auto& g : generators) {
    if (g.size() != ambient_dim) throw std::invalid_argument("dimension mismatch");
    l.insert(g);
  }
  l.normalize();
  return l;
}

void IntegerLattice::insert(std::vector<Integer> v) {
  std::size_t c = 0;
  while (true) {
    while (c < ambient_ && v[c] == 0) ++c;
    if (c == ambient_) return;
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < c) ++pos;
    if (pos == pivots_.size() || pivots_[pos] != c) {
      if (v[c] < 0)
        for (auto& x : v) x = -x;
      rows_.insert(rows_.begin() + pos, std::move(v));
      pivots_.insert(pivots_.begin() + pos, c);
      return;
    }
    // Euclid on column c between the pivot row and v.
    auto& row = rows_[pos];
    while (v[c] != 0) {
      Integer q = floor_div(row[c], v[c]);
      for (std::size_t j = c; j < ambient_; ++j) row[j] -= q * v[j];
      std::swap(row, v);
    }
    if (row[c] < 0)
      for (auto& x : row) x = -x;
    ++c;
  }
}

void IntegerLattice::normalize() {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto p = pivots_[i];
    for (std::size_t r = 0; r < i; ++r) {
      Integer q = floor_div(rows_[r][p], rows_[i][p]);
      if (q == 0) continue;
      for (std::size_t j = p; j < ambient_; ++j) rows_[r][j] -= q * rows_[i][j];
    }
  }
}

bool IntegerLattice::contains(std::vector<Integer> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("dimension mismatch");
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (v[c] == 0) {
      if (next < pivots_.size() && pivots_[next] == c) ++next;
      continue;
    }
    if (next == pivots_.size() || pivots_[next] != c) return false;
    const auto& row = rows_[next];
    if (v[c] % row[c] != 0) return false;
    Integer q = v[c] / row[c];
    for (std::size_t j = c; j < ambient_; ++j) v[j] -= q * row[j];
    ++next;
  }
  return true;
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Integer IntegerLattice::index() const {
  if (rank() != ambient_) throw std::logic_error("index of a lattice that is not full rank");
  Integer p = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) p *= rows_[i][pivots_[i]];
  return p;
}

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b) {
  auto gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return IntegerLattice::generated_by(a.ambient_dim(), gens);
}

std::vector<GroupRingElement> jk_basis(int d, int k) {
  if (k < 0) throw std::invalid_argument("negative k");
  std::vector<GroupRingElement> out;
  for (std::uint32_t s = 0; s < (1u << d); ++s) {
    auto p = GroupRingElement::scalar(d, 1);
    for (int i = 0; i < d; ++i)
      if (s >> i & 1u) p = p * GroupRingElement::one_minus(ring::GroupElement::generator(d, i));
    const int l = std::popcount(s);
    if (l < k) p = p.scaled(Integer(1) << (k - l));
    out.push_back(std::move(p));
  }
  return out;
}

IntegerLattice jk_lattice(int d, int k) {
  static std::map<std::pair<int, int>, IntegerLattice> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find({d, k});
  if (it != cache.end()) return it->second;
  std::vector<std::vector<Integer>> gens;
  for (const auto& b : jk_basis(d, k)) gens.push_back(as_vector(b));
  auto l = IntegerLattice::generated_by(std::size_t{1} << d, gens);
  cache.emplace(std::pair{d, k}, l);
  return l;
}

IntegerLattice ik_lattice(int d, int k) {
  if (k < 0) throw std::invalid_argument("negative k");
  const std::size_t n = std::size_t{1} << d;
  std::vector<GroupRingElement> ideal_gens;
  for (std::uint32_t g = 1; g < n; ++g)
    ideal_gens.push_back(GroupRingElement::one_minus({d, g}));
  auto current = IntegerLattice::generated_by(n, {as_vector(GroupRingElement::scalar(d, 1))});
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<Integer>> gens;
    for (const auto& row : current.basis()) {
      GroupRingElement x(d);
      for (std::size_t i = 0; i < n; ++i) x[static_cast<std::uint32_t>(i)] = row[i];
      for (const auto& y : ideal_gens) gens.push_back(as_vector(x * y));
    }
    current = IntegerLattice::generated_by(n, gens);
  }
  return current;
}

bool jk_member_by_characters(const GroupRingElement& x, int k) {
  if (k < 0) throw std::invalid_argument("negative k");
  const Integer mod = Integer(1) << k;
  for (std::uint32_t m = 0; m < (1u << x.d()); ++m)
    if (eps(m, x) % mod != 0) return false;
  return true;
}

bool jk_member_by_lattice(const GroupRingElement& x, int k) {
  return jk_lattice(x.d(), k).contains(as_vector(x));
}

bool jk_member(const GroupRingElement& x, int k) {
  const bool a = jk_member_by_characters(x, k);
  const bool b = jk_member_by_lattice(x, k);
  if (a != b) throw std::logic_error("J^k membership algorithms disagree");
  return a;
}

ring::GradedElement graded_class(const GroupRingElement& x, int k) {
  if (!jk_member(x, k)) throw std::invalid_argument("element is not in J^k");
  const int d = x.d();
  const std::uint32_t n = 1u << d;
  ring::GradedElement out(d, k);
  // x = sum_S a_S prod_{i in S}(1 - x_i) with a_S = (-1)^{|S|} sum_{T superset S} x_T.
  for (std::uint32_t s = 0; s < n; ++s) {
    const int l = std::popcount(s);
    if (l > k) continue;
    Integer a = 0;
    for (std::uint32_t t = 0; t < n; ++t)
      if ((t & s) == s) a += x[t];
    if (l & 1) a = -a;
    const Integer scale = Integer(1) << (k - l);
    if (a % scale != 0) throw std::logic_error("coefficient not divisible in J^k basis");
    Integer c = a / scale;
    if (c % 2 != 0) out.set(s);
  }
  return out;
}

}  // namespace abcover::oracle
