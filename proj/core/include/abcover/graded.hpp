#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "abcover/gf2.hpp"

namespace abcover::ring {

inline constexpr int kMaxRank = 16;

// Element of G = (Z/2)^d; bit i of `bits` is the coefficient of x_{i+1}.
struct GroupElement {
  int d = 0;
  std::uint32_t bits = 0;

  static GroupElement identity(int d) { return {d, 0}; }
  static GroupElement generator(int d, int i);  // x_{i+1}, 0-based i
  static GroupElement from_string(const std::string& s);

  bool is_identity() const { return bits == 0; }
  std::string to_string() const;

  GroupElement operator*(const GroupElement& o) const;
  bool operator==(const GroupElement&) const = default;
  auto operator<=>(const GroupElement&) const = default;
};

// Index-2 subgroup H, as the functional delta_H(g) = popcount(mask & g) mod 2.
struct Character {
  int d = 0;
  std::uint32_t mask = 0;

  static Character from_string(const std::string& s);
  // Canonical order: masks 1 .. 2^d - 1; index = mask - 1.
  static std::vector<Character> all(int d);
  std::size_t index() const { return mask - 1; }
  std::string to_string() const;

  bool operator==(const Character&) const = default;
  auto operator<=>(const Character&) const = default;
};

bool char_value(const Character& h, const GroupElement& g);
inline std::size_t num_characters(int d) { return (std::size_t{1} << d) - 1; }

// Homogeneous element of B_k. Coordinates are indexed by subset masks S of
// {1..d}; only |S| <= min(k, d) may be nonzero. Subset S stands for the
// monomial [2]^{k-|S|} * prod_{i in S} omega(x_i).
class GradedElement {
 public:
  GradedElement(int d, int degree);

  static GradedElement monomial(int d, int degree, std::uint32_t subset);
  static GradedElement two_power(int d, int k) { return monomial(d, k, 0); }

  int d() const { return d_; }
  int degree() const { return degree_; }
  bool coeff(std::uint32_t subset) const { return coeffs_.get(subset); }
  void set(std::uint32_t subset, bool value = true);
  bool is_zero() const { return coeffs_.is_zero(); }
  bool in_A() const { return degree_ >= 1 && !coeffs_.get(0); }

  // Admissible subsets in canonical order: by size, then by mask.
  static std::vector<std::uint32_t> basis_subsets(int d, int degree);
  // Coordinates in the basis_subsets order.
  gf2::BitVector coordinates() const;
  std::vector<std::uint32_t> support() const;

  GradedElement& operator+=(const GradedElement& o);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  bool operator==(const GradedElement&) const = default;

 private:
  int d_;
  int degree_;
  gf2::BitVector coeffs_;  // length 2^d
};

GradedElement omega(const GroupElement& g);
GradedElement graded_mul(const GradedElement& a, const GradedElement& b);

// Length 2^d - 1, coordinate Character::index().
using OmegaVector = gf2::BitVector;
OmegaVector omega_map(const GradedElement& a);

std::size_t binomial(int n, int r);  // 0 unless 0 <= r <= n
std::size_t dim_Bk(int d, int k);
std::size_t dim_Ak(int d, int k);

gf2::Subspace omega_Bk_subspace(int d, int k);
gf2::Subspace omega_Ak_subspace(int d, int k);
gf2::Subspace ak_rel_subspace(int d, int k, const std::vector<GroupElement>& gens);

}  // namespace abcover::ring
