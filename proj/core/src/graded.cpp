#include "abcover/graded.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace abcover::ring {

namespace {

void check_rank(int d) {
  if (d < 0 || d > kMaxRank) throw std::invalid_argument("rank out of range");
}

void same_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("rank mismatch");
}

std::uint32_t bits_from_string(const std::string& s) {
  if (static_cast<int>(s.size()) > kMaxRank) throw std::invalid_argument("bit string too long");
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= 1u << i;
    else if (s[i] != '0')
      throw std::invalid_argument("bit string may only contain '0' and '1'");
  }
  return bits;
}

std::string bits_to_string(int d, std::uint32_t bits) {
  std::string s(d, '0');
  for (int i = 0; i < d; ++i)
    if (bits >> i & 1u) s[i] = '1';
  return s;
}

}  // namespace

GroupElement GroupElement::generator(int d, int i) {
  check_rank(d);
  if (i < 0 || i >= d) throw std::out_of_range("generator index out of range");
  return {d, 1u << i};
}

GroupElement GroupElement::from_string(const std::string& s) {
  return {static_cast<int>(s.size()), bits_from_string(s)};
}

std::string GroupElement::to_string() const { return bits_to_string(d, bits); }

GroupElement GroupElement::operator*(const GroupElement& o) const {
  same_rank(d, o.d);
  return {d, bits ^ o.bits};
}

Character Character::from_string(const std::string& s) {
  Character h{static_cast<int>(s.size()), bits_from_string(s)};
  if (h.mask == 0) throw std::invalid_argument("character mask must be nonzero");
  return h;
}

std::vector<Character> Character::all(int d) {
  check_rank(d);
  std::vector<Character> out;
  for (std::uint32_t m = 1; m < (1u << d); ++m) out.push_back({d, m});
  return out;
}

std::string Character::to_string() const { return bits_to_string(d, mask); }

bool char_value(const Character& h, const GroupElement& g) {
  same_rank(h.d, g.d);
  return std::popcount(h.mask & g.bits) & 1;
}

GradedElement::GradedElement(int d, int degree) : d_(d), degree_(degree) {
  check_rank(d);
  if (degree < 0) throw std::invalid_argument("negative degree");
  coeffs_ = gf2::BitVector(std::size_t{1} << d);
}

GradedElement GradedElement::monomial(int d, int degree, std::uint32_t subset) {
  GradedElement e(d, degree);
  e.set(subset);
  return e;
}

void GradedElement::set(std::uint32_t subset, bool value) {
  if (subset >= (1u << d_)) throw std::out_of_range("subset outside {1..d}");
  if (value && std::popcount(subset) > degree_)
    throw std::invalid_argument("subset larger than degree");
  coeffs_.set(subset, value);
}

std::vector<std::uint32_t> GradedElement::basis_subsets(int d, int degree) {
  check_rank(d);
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << d); ++s)
    if (std::popcount(s) <= degree) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](auto a, auto b) {
    return std::popcount(a) < std::popcount(b);
  });
  return out;
}

gf2::BitVector GradedElement::coordinates() const {
  auto basis = basis_subsets(d_, degree_);
  gf2::BitVector v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs_.get(basis[i])) v.set(i);
  return v;
}

std::vector<std::uint32_t> GradedElement::support() const {
  std::vector<std::uint32_t> out;
  for (auto s : coeffs_.support()) out.push_back(static_cast<std::uint32_t>(s));
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  same_rank(d_, o.d_);
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  coeffs_ ^= o.coeffs_;
  return *this;
}

GradedElement omega(const GroupElement& g) {
  GradedElement e(g.d, 1);
  for (int i = 0; i < g.d; ++i)
    if (g.bits >> i & 1u) e.set(1u << i);
  return e;
}

GradedElement graded_mul(const GradedElement& a, const GradedElement& b) {
  same_rank(a.d(), b.d());
  GradedElement out(a.d(), a.degree() + b.degree());
  auto sa = a.support();
  auto sb = b.support();
  for (auto s : sa)
    for (auto t : sb) out.set(s | t, !out.coeff(s | t));
  return out;
}

OmegaVector omega_map(const GradedElement& a) {
  const std::uint32_t n = 1u << a.d();
  OmegaVector v(n - 1);
  auto support = a.support();
  for (std::uint32_t h = 1; h < n; ++h) {
    bool bit = false;
    // x_i notin H exactly when bit i of the mask is set.
    for (auto s : support) bit ^= (s & h) == s;
    if (bit) v.set(h - 1);
  }
  return v;
}

std::size_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::size_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

std::size_t dim_Bk(int d, int k) {
  if (k < 0) throw std::invalid_argument("negative degree");
  std::size_t total = 0;
  for (int l = 0; l <= std::min(k, d); ++l) total += binomial(d, l);
  return total;
}

std::size_t dim_Ak(int d, int k) {
  if (k < 1) throw std::invalid_argument("A_k needs k >= 1");
  return dim_Bk(d, k) - 1;
}

namespace {

gf2::Subspace image_of_monomials(int d, int k, bool include_empty) {
  std::vector<gf2::BitVector> gens;
  for (auto s : GradedElement::basis_subsets(d, k)) {
    if (s == 0 && !include_empty) continue;
    gens.push_back(omega_map(GradedElement::monomial(d, k, s)));
  }
  return gf2::Subspace::span(num_characters(d), gens);
}

template <class Key>
const gf2::Subspace& cached(std::map<Key, gf2::Subspace>& cache, std::mutex& mu, const Key& key,
                            auto&& make) {
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make()).first;
  return it->second;
}

}  // namespace

gf2::Subspace omega_Bk_subspace(int d, int k) {
  check_rank(d);
  if (k < 0) throw std::out_of_range("k out of range");
  return image_of_monomials(d, k, true);
}

gf2::Subspace omega_Ak_subspace(int d, int k) {
  check_rank(d);
  if (k < 1 || k > d) throw std::out_of_range("k out of range");
  static std::map<std::pair<int, int>, gf2::Subspace> cache;
  static std::mutex mu;
  return cached(cache, mu, std::pair{d, k}, [&] { return image_of_monomials(d, k, false); });
}

gf2::Subspace ak_rel_subspace(int d, int k, const std::vector<GroupElement>& gens) {
  check_rank(d);
  if (k < 1 || k > d) throw std::out_of_range("k out of range");
  for (const auto& g : gens) same_rank(d, g.d);
  const std::size_t n = num_characters(d);
  // Coordinates H with delta_H nonzero on some generator survive.
  std::vector<gf2::BitVector> axes;
  for (std::uint32_t h = 1; h <= n; ++h) {
    bool alive = false;
    for (const auto& g : gens) alive |= std::popcount(h & g.bits) & 1;
    if (alive) {
      gf2::BitVector e(n);
      e.set(h - 1);
      axes.push_back(std::move(e));
    }
  }
  return gf2::intersection(omega_Ak_subspace(d, k), gf2::Subspace::span(n, axes));
}

}  // namespace abcover::ring
