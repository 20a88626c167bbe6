#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "abcover/graded.hpp"

namespace abcover::oracle {

using Integer = boost::multiprecision::cpp_int;

// Element of Z[G]; coefficient index is the group element's bit mask.
class GroupRingElement {
 public:
  explicit GroupRingElement(int d);

  static GroupRingElement scalar(int d, const Integer& c);
  static GroupRingElement basis(const ring::GroupElement& g);
  // 1 - g
  static GroupRingElement one_minus(const ring::GroupElement& g);

  int d() const { return d_; }
  const Integer& operator[](std::uint32_t g) const { return coeffs_[g]; }
  Integer& operator[](std::uint32_t g) { return coeffs_[g]; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  GroupRingElement scaled(const Integer& c) const;

  bool operator==(const GroupRingElement&) const = default;

 private:
  int d_;
  std::vector<Integer> coeffs_;
};

// mask == 0 means H = G (augmentation); otherwise the character with that mask.
Integer eps(std::uint32_t mask, const GroupRingElement& x);
inline Integer eps(const ring::Character& h, const GroupRingElement& x) { return eps(h.mask, x); }

// Row-style Hermite normal form: rows sorted by strictly increasing pivot
// column, positive pivots, entries above each pivot reduced into [0, pivot).
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static IntegerLattice generated_by(std::size_t ambient_dim,
                                     const std::vector<std::vector<Integer>>& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Integer>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::vector<Integer> v) const;
  bool contains(const IntegerLattice& other) const;
  // Index in Z^n when full rank; product of pivots.
  Integer index() const;

  bool operator==(const IntegerLattice& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  void insert(std::vector<Integer> v);
  void normalize();

  std::size_t ambient_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

IntegerLattice lattice_sum(const IntegerLattice& a, const IntegerLattice& b);

// The basis B_k of J^k, indexed by subset S (l = |S|).
std::vector<GroupRingElement> jk_basis(int d, int k);
IntegerLattice jk_lattice(int d, int k);
// Lattice of I^k, built as I * I^{k-1}.
IntegerLattice ik_lattice(int d, int k);

bool jk_member_by_characters(const GroupRingElement& x, int k);
bool jk_member_by_lattice(const GroupRingElement& x, int k);
bool jk_member(const GroupRingElement& x, int k);  // both; throws if they disagree

// [x]_k in the squarefree-monomial basis of B_k.
ring::GradedElement graded_class(const GroupRingElement& x, int k);

}  // namespace abcover::oracle
