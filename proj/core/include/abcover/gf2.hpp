#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace abcover::gf2 {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size);

  // '0'/'1' characters, position i is coordinate i.
  static BitVector from_string(const std::string& bits);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool is_zero() const;
  std::size_t popcount() const;
  bool dot(const BitVector& other) const;
  std::optional<std::size_t> lowest_set() const;
  std::vector<std::size_t> support() const;

  std::span<std::uint64_t> words() { return words_; }
  std::span<const std::uint64_t> words() const { return words_; }

  std::string to_string() const;

  bool operator==(const BitVector&) const = default;
  auto operator<=>(const BitVector& other) const {
    if (size_ != other.size_) return size_ <=> other.size_;
    return to_string() <=> other.to_string();
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Dense row-major matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool value = true);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
  }

  std::uint64_t* row_data(std::size_t r) { return data_.data() + r * stride_; }
  const std::uint64_t* row_data(std::size_t r) const { return data_.data() + r * stride_; }

  BitVector row(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& v);
  void append_row(const BitVector& v);
  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);

  BitVector multiply(const BitVector& x) const;     // M x
  BitVector left_multiply(const BitVector& y) const; // y^T M
  BitMatrix multiply(const BitMatrix& other) const;
  BitMatrix transpose() const;

  // In-place reduced row echelon form; returns pivot columns, one per nonzero row.
  // Rows past the returned count are zero afterwards.
  std::vector<std::size_t> rref();

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

// A subspace of GF(2)^n stored by its canonical basis: the nonzero rows of
// the reduced row echelon form of any spanning set.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);  // zero subspace

  static Subspace span(std::size_t ambient_dim, const std::vector<BitVector>& generators);
  static Subspace row_space(BitMatrix m);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const BitMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<BitVector> basis_vectors() const;

  bool contains(const BitVector& v) const;
  BitVector reduce(BitVector v) const;
  bool contains(const Subspace& other) const;
  Subspace orthogonal_complement() const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  BitMatrix basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(BitMatrix m);

// Canonical basis of { x : M x = 0 }.
Subspace kernel_basis(const BitMatrix& m);

// A solution of M x = b with every free variable set to zero, or nullopt.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

}  // namespace abcover::gf2
