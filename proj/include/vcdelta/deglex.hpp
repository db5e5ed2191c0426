#pragma once

#include <cassert>
#include <compare>
#include <vector>

#include "bits.hpp"

namespace vcdelta {

// Degree-lexicographic term order on square-free monomials with the
// variable order x_n < ... < x_1: lower total degree compares smaller; on
// equal degree the monomial containing the smallest element on which the
// two differ is the larger one.
constexpr bool deglex_less(Mask a, Mask b) {
  const int da = set_size(a), db = set_size(b);
  if (da != db) return da < db;
  if (a == b) return false;
  return (b & low_bit(a ^ b)) != 0;
}

constexpr std::strong_ordering deglex_cmp(Mask a, Mask b) {
  if (a == b) return std::strong_ordering::equal;
  return deglex_less(a, b) ? std::strong_ordering::less
                           : std::strong_ordering::greater;
}

struct DeglexOrder {
  int n = 0;
  bool less(Mask a, Mask b) const { return deglex_less(a, b); }
  std::strong_ordering cmp(Mask a, Mask b) const { return deglex_cmp(a, b); }
};

namespace detail {

// Emits every j-subset {s_1 < ... < s_j} of [n] in ascending deglex order.
// Ascending deglex within one degree means the smallest element runs from
// large to small, recursively at every level. With d_rule set, only
// subsets satisfying s_i >= 2i are produced.
template <typename Fn>
void deglex_subsets_rec(int n, int level, int j, int chain_lo, bool d_rule,
                        Mask acc, Fn&& emit) {
  if (level > j) {
    emit(acc);
    return;
  }
  const int hi = n - (j - level);
  int lo = chain_lo;
  if (d_rule && 2 * level > lo) lo = 2 * level;
  for (int s = hi; s >= lo; --s)
    deglex_subsets_rec(n, level + 1, j, s + 1, d_rule, acc | element_bit(s),
                       emit);
}

}  // namespace detail

template <typename Fn>
void for_each_deglex_subset(int n, int j, bool d_rule, Fn&& emit) {
  if (j == 0) {
    emit(Mask{0});
    return;
  }
  detail::deglex_subsets_rec(n, 1, j, 1, d_rule, Mask{0}, emit);
}

inline std::vector<Mask> deglex_subsets(int n, int j, bool d_rule = false) {
  std::vector<Mask> out;
  for_each_deglex_subset(n, j, d_rule, [&](Mask m) { out.push_back(m); });
  return out;
}

// Membership in D_{k,n}: at most k elements, and the i-th smallest element
// is at least 2i.
constexpr bool in_D(Mask h, int k) {
  if (set_size(h) > k) return false;
  int i = 0;
  while (h) {
    ++i;
    if (std::countr_zero(h) + 1 < 2 * i) return false;
    h &= h - 1;
  }
  return true;
}

// D_{k,n} in ascending deglex order: all {s_1 < ... < s_j} with j <= k and
// s_i >= 2i. Has exactly C(n,k) members whenever 2k <= n.
inline std::vector<Mask> enumerate_D(int n, int k) {
  assert(0 <= k && k <= n);
  std::vector<Mask> out;
  if (2 * k <= n) out.reserve(static_cast<std::size_t>(binomial(n, k)));
  for (int j = 0; j <= k; ++j)
    for_each_deglex_subset(n, j, /*d_rule=*/true,
                           [&](Mask m) { out.push_back(m); });
  return out;
}

}  // namespace vcdelta
