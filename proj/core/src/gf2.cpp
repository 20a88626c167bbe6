#include "abcover/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace abcover::gf2 {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

BitVector::BitVector(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may only contain '0' and '1'");
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  auto mask = std::uint64_t{1} << (i & 63);
  if (value)
    words_[i >> 6] |= mask;
  else
    words_[i >> 6] &= ~mask;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require(size_ == other.size_, "dimension mismatch in vector xor");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

bool BitVector::dot(const BitVector& other) const {
  require(size_ == other.size_, "dimension mismatch in dot product");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) & 1;
}

std::optional<std::size_t> BitVector::lowest_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
  return std::nullopt;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  auto& w = data_[r * stride_ + (c >> 6)];
  auto mask = std::uint64_t{1} << (c & 63);
  if (value)
    w |= mask;
  else
    w &= ~mask;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy_n(row_data(r), stride_, v.words().begin());
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
  require(v.size() == cols_, "dimension mismatch in set_row");
  std::copy(v.words().begin(), v.words().end(), row_data(r));
}

void BitMatrix::append_row(const BitVector& v) {
  require(v.size() == cols_, "dimension mismatch in append_row");
  data_.insert(data_.end(), v.words().begin(), v.words().end());
  ++rows_;
}

void BitMatrix::xor_row_into(std::size_t src, std::size_t dst) {
  const auto* s = row_data(src);
  auto* d = row_data(dst);
  for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row_data(a), row_data(a) + stride_, row_data(b));
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  require(x.size() == cols_, "dimension mismatch in matrix-vector product");
  BitVector out(rows_);
  auto xw = x.words();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const auto* row = row_data(r);
    for (std::size_t w = 0; w < stride_; ++w) acc ^= row[w] & xw[w];
    if (std::popcount(acc) & 1) out.set(r);
  }
  return out;
}

BitVector BitMatrix::left_multiply(const BitVector& y) const {
  require(y.size() == rows_, "dimension mismatch in vector-matrix product");
  BitVector out(cols_);
  auto ow = out.words();
  for (auto r : y.support()) {
    const auto* row = row_data(r);
    for (std::size_t w = 0; w < stride_; ++w) ow[w] ^= row[w];
  }
  return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
  require(cols_ == other.rows_, "dimension mismatch in matrix product");
  BitMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto* dst = out.row_data(r);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!get(r, c)) continue;
      const auto* src = other.row_data(c);
      for (std::size_t w = 0; w < out.stride_; ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto* row = row_data(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      auto bits = row[w];
      while (bits) {
        t.set(w * 64 + std::countr_zero(bits), r);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

std::vector<std::size_t> BitMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t word = c >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    std::size_t p = rank;
    while (p < rows_ && !(data_[p * stride_ + word] & mask)) ++p;
    if (p == rows_) continue;
    swap_rows(p, rank);
    const auto* pivot_row = row_data(rank);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      auto* row = row_data(r);
      if (!(row[word] & mask)) continue;
      // Columns left of `word` are already clear in the pivot row.
      for (std::size_t w = word; w < stride_; ++w) row[w] ^= pivot_row[w];
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

std::size_t rank(BitMatrix m) { return m.rref().size(); }

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::row_space(BitMatrix m) {
  Subspace s;
  s.ambient_ = m.cols();
  s.pivots_ = m.rref();
  BitMatrix basis(s.pivots_.size(), m.cols());
  for (std::size_t r = 0; r < s.pivots_.size(); ++r)
    std::copy_n(m.row_data(r), m.stride(), basis.row_data(r));
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<BitVector>& generators) {
  return row_space(BitMatrix::from_rows(generators, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(BitMatrix::identity(ambient_dim));
}

std::vector<BitVector> Subspace::basis_vectors() const {
  std::vector<BitVector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

BitVector Subspace::reduce(BitVector v) const {
  require(v.size() == ambient_, "dimension mismatch in subspace reduction");
  auto vw = v.words();
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    if (!v.get(pivots_[r])) continue;
    const auto* row = basis_.row_data(r);
    for (std::size_t w = 0; w < basis_.stride(); ++w) vw[w] ^= row[w];
  }
  return v;
}

bool Subspace::contains(const BitVector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  require(ambient_ == other.ambient_, "dimension mismatch in subspace containment");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::orthogonal_complement() const { return kernel_basis(basis_); }

Subspace kernel_basis(const BitMatrix& m) {
  BitMatrix r = m;
  auto pivots = r.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BitVector> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector x(m.cols());
    x.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (r.get(i, f)) x.set(pivots[i]);
    gens.push_back(std::move(x));
  }
  return Subspace::span(m.cols(), gens);
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
  require(b.size() == m.rows(), "dimension mismatch in solve");
  BitMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (auto c : m.row(r).support()) aug.set(r, c);
    if (b.get(r)) aug.set(r, m.cols());
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  BitVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (aug.get(i, m.cols())) x.set(pivots[i]);
  return x;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "dimension mismatch in subspace sum");
  BitMatrix m(0, a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) m.append_row(a.basis().row(r));
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
  return Subspace::row_space(std::move(m));
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "dimension mismatch in subspace intersection");
  return sum(a.orthogonal_complement(), b.orthogonal_complement()).orthogonal_complement();
}

}  // namespace abcover::gf2
