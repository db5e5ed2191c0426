#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace vcdelta {

// A subset of the ground set [n] = {1,...,n}, n <= 64, packed into one
// word: element i occupies bit i-1. The same word serves as the set's
// characteristic vector and as the square-free monomial x_S.
using Mask = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// single-bit mask of a 1-based element
constexpr Mask element_bit(int i) { return Mask{1} << (i - 1); }

constexpr int set_size(Mask m) { return std::popcount(m); }

constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr Mask low_bit(Mask m) { return m & (~m + 1); }

// Reverses the low n bits of m (element 1 <-> element n).
constexpr Mask bit_reverse(Mask m, int n) {
  m = ((m & 0x5555555555555555ULL) << 1) | ((m >> 1) & 0x5555555555555555ULL);
  m = ((m & 0x3333333333333333ULL) << 2) | ((m >> 2) & 0x3333333333333333ULL);
  m = ((m & 0x0F0F0F0F0F0F0F0FULL) << 4) | ((m >> 4) & 0x0F0F0F0F0F0F0F0FULL);
  m = ((m & 0x00FF00FF00FF00FFULL) << 8) | ((m >> 8) & 0x00FF00FF00FF00FFULL);
  m = ((m & 0x0000FFFF0000FFFFULL) << 16) | ((m >> 16) & 0x0000FFFF0000FFFFULL);
  m = (m << 32) | (m >> 32);
  return n >= 64 ? m : m >> (64 - n);
}

// 1-based elements of m in ascending order
inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

// C(n,k) for 0 <= n <= 64; every entry of Pascal's triangle up to row 64
// fits in an unsigned 64-bit word.
inline std::uint64_t binomial(int n, int k) {
  assert(n >= 0 && n <= kMaxGroundSet);
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxGroundSet + 1>, kMaxGroundSet + 1> t{};
    for (int i = 0; i <= kMaxGroundSet; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (k < 0 || k > n) return 0;
  return table[n][k];
}

// sum_{i=0}^{max_k} C(n,i); the empty sum (max_k < 0) is 0
inline std::uint64_t binomial_sum(int n, int max_k) {
  std::uint64_t s = 0;
  for (int i = 0; i <= max_k && i <= n; ++i) s += binomial(n, i);
  return s;
}

// Next mask with the same popcount in increasing numeric order (Gosper's
// hack), or 0 once the subsets of [n] are exhausted. m must be nonzero.
inline Mask next_combination(Mask m, int n) {
  assert(m != 0);
  const Mask t = m | (m - 1);
  if (t == ~Mask{0}) return 0;
  const Mask next =
      (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(m) + 1));
  return subset_of(next, full_mask(n)) ? next : 0;
}

// all k-subsets of [n], ascending as integers
inline std::vector<Mask> all_subsets_of_size(int n, int k) {
  assert(0 <= k && k <= n);
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  for (Mask m = full_mask(k); m != 0; m = next_combination(m, n)) out.push_back(m);
  return out;
}

}  // namespace vcdelta
