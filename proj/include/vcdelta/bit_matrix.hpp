#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <vector>

namespace vcdelta {

// Dense GF(2) matrix with 64-bit word-packed rows. Elimination routines
// work on copies; the matrix itself is a plain value type.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return wpr_; }

  bool get(std::size_t r, std::size_t c) const {
    return (w_[r * wpr_ + c / 64] >> (c % 64)) & 1;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& word = w_[r * wpr_ + c / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    if (v)
      word |= bit;
    else
      word &= ~bit;
  }

  std::uint64_t* row(std::size_t r) { return w_.data() + r * wpr_; }
  const std::uint64_t* row(std::size_t r) const { return w_.data() + r * wpr_; }

  void xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= s[w];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + wpr_, row(b));
  }

  // Gaussian elimination on a copy; pivots chosen as the first row with a
  // set bit in the current column, so the result is deterministic.
  std::size_t rank() const {
    BitMatrix a = *this;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      std::size_t piv = rows_;
      for (std::size_t r = rk; r < rows_; ++r)
        if (a.row(r)[w] & bit) {
          piv = r;
          break;
        }
      if (piv == rows_) continue;
      a.swap_rows(rk, piv);
      for (std::size_t r = rk + 1; r < rows_; ++r)
        if (a.row(r)[w] & bit) a.xor_rows(r, rk);
      ++rk;
    }
    return rk;
  }

  // One solution of (*this) x = b, or nullopt when inconsistent. Free
  // variables are set to zero; the solution is unique iff the matrix has
  // full column rank.
  std::optional<std::vector<std::uint8_t>> solve(
      const std::vector<std::uint8_t>& b) const {
    assert(b.size() == rows_);
    BitMatrix a = *this;
    std::vector<std::uint8_t> rhs(b);
    std::vector<std::size_t> pivot_col;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      std::size_t piv = rows_;
      for (std::size_t r = rk; r < rows_; ++r)
        if (a.row(r)[w] & bit) {
          piv = r;
          break;
        }
      if (piv == rows_) continue;
      a.swap_rows(rk, piv);
      std::swap(rhs[rk], rhs[piv]);
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != rk && (a.row(r)[w] & bit)) {
          a.xor_rows(r, rk);
          rhs[r] ^= rhs[rk];
        }
      pivot_col.push_back(c);
      ++rk;
    }
    for (std::size_t r = rk; r < rows_; ++r)
      if (rhs[r]) return std::nullopt;
    std::vector<std::uint8_t> x(cols_, 0);
    for (std::size_t i = 0; i < rk; ++i) x[pivot_col[i]] = rhs[i];
    return x;
  }

  // Gauss-Jordan on [A | I]; nullopt when singular.
  std::optional<BitMatrix> inverse() const {
    assert(rows_ == cols_);
    BitMatrix a = *this;
    BitMatrix inv = identity(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      std::size_t piv = rows_;
      for (std::size_t r = c; r < rows_; ++r)
        if (a.row(r)[w] & bit) {
          piv = r;
          break;
        }
      if (piv == rows_) return std::nullopt;
      a.swap_rows(c, piv);
      inv.swap_rows(c, piv);
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != c && (a.row(r)[w] & bit)) {
          a.xor_rows(r, c);
          inv.xor_rows(r, c);
        }
    }
    return inv;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::uint64_t* rw = row(r);
      for (std::size_t w = 0; w < wpr_; ++w) {
        std::uint64_t expect = 0;
        if (r / 64 == w) expect = std::uint64_t{1} << (r % 64);
        if (rw[w] != expect) return false;
      }
    }
    return true;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

// C = A B over GF(2): row i of C is the XOR of the rows of B selected by
// row i of A.
inline BitMatrix gf2_matmul(const BitMatrix& a, const BitMatrix& b) {
  assert(a.cols() == b.rows());
  BitMatrix c(a.rows(), b.cols());
  const std::size_t wpr = c.words_per_row();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t* out = c.row(i);
    const std::uint64_t* sel = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j)
      if ((sel[j / 64] >> (j % 64)) & 1) {
        const std::uint64_t* src = b.row(j);
        for (std::size_t w = 0; w < wpr; ++w) out[w] ^= src[w];
      }
  }
  return c;
}

// C = A B^T over GF(2): entry (i,j) is the parity of <row_i(A), row_j(B)>.
inline BitMatrix gf2_matmul_transposed(const BitMatrix& a, const BitMatrix& b) {
  assert(a.cols() == b.cols());
  BitMatrix c(a.rows(), b.rows());
  const std::size_t wpr = a.words_per_row();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const std::uint64_t* ra = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const std::uint64_t* rb = b.row(j);
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < wpr; ++w) acc ^= ra[w] & rb[w];
      if (std::popcount(acc) & 1) c.set(i, j, true);
    }
  }
  return c;
}

}  // namespace vcdelta
