#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bits.hpp"

namespace vcdelta {

// A finite family of subsets of [n]: deduplicated, members ascending as
// unsigned integers.
struct SetFamily {
  int n = 0;
  std::vector<Mask> members;

  SetFamily() = default;
  SetFamily(int n_, std::vector<Mask> ms) : n(n_), members(std::move(ms)) {
    if (n < 1 || n > kMaxGroundSet)
      throw std::invalid_argument("SetFamily: ground set size must be in [1,64]");
    for (Mask m : members)
      if (!subset_of(m, full_mask(n)))
        throw std::invalid_argument("SetFamily: member outside ground set");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(Mask m) const {
    return std::binary_search(members.begin(), members.end(), m);
  }
  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

// k when every member has exactly k elements; the empty family carries no
// uniformity value
inline std::optional<int> is_uniform(const SetFamily& f) {
  if (f.empty()) return std::nullopt;
  const int k = set_size(f.members.front());
  for (Mask m : f.members)
    if (set_size(m) != k) return std::nullopt;
  return k;
}

// {A xor B : A in f, B in g}
inline SetFamily sym_diff_family(const SetFamily& f, const SetFamily& g) {
  if (f.n != g.n)
    throw std::invalid_argument("sym_diff_family: mismatched ground sets");
  std::vector<Mask> out;
  out.reserve(f.size() * g.size());
  for (Mask a : f.members)
    for (Mask b : g.members) out.push_back(a ^ b);
  return SetFamily(f.n, std::move(out));
}

// True iff {K & m : K in keys} takes all 2^|m| values. Works on any sorted
// distinct mask list; aborts as soon as the trace set is full, and rejects
// up front when there are fewer masks than traces.
inline bool masks_shatter(const std::vector<Mask>& keys, Mask m) {
  if (keys.empty()) return false;
  const int mm = set_size(m);
  if (mm >= 63) return false;
  const std::uint64_t want = std::uint64_t{1} << mm;
  if (keys.size() < want) return false;
  int pos[64];
  int np = 0;
  for (Mask t = m; t; t &= t - 1) pos[np++] = std::countr_zero(t);
  if (mm <= 6) {
    // trace set fits one word
    const std::uint64_t all = want == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << want) - 1;
    std::uint64_t seen = 0;
    for (Mask key : keys) {
      const Mask t = key & m;
      std::uint64_t idx = 0;
      for (int i = 0; i < np; ++i) idx |= ((t >> pos[i]) & 1) << i;
      seen |= std::uint64_t{1} << idx;
      if (seen == all) return true;
    }
    return false;
  }
  std::vector<std::uint64_t> seen((want + 63) / 64, 0);
  std::uint64_t distinct = 0;
  for (Mask key : keys) {
    const Mask t = key & m;
    std::uint64_t idx = 0;
    for (int i = 0; i < np; ++i) idx |= ((t >> pos[i]) & 1) << i;
    std::uint64_t& word = seen[idx >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (idx & 63);
    if (!(word & bit)) {
      word |= bit;
      if (++distinct == want) return true;
    }
  }
  return false;
}

inline bool shatters(const SetFamily& f, Mask m) {
  assert(subset_of(m, full_mask(f.n)));
  return masks_shatter(f.members, m);
}

struct VcWitness {
  int dim = -1;
  Mask witness = 0;
};

// Largest shattered set, found by growing the target size until no set of
// that size is shattered; sound because shattered sets are downward closed.
inline VcWitness vc_dim_witness(const SetFamily& f) {
  if (f.empty()) return {-1, 0};
  VcWitness best{0, 0};
  for (int sz = 1; sz <= f.n; ++sz) {
    if (f.size() < (std::uint64_t{1} << std::min(sz, 62))) break;
    bool found = false;
    for (Mask m = full_mask(sz); m != 0; m = next_combination(m, f.n)) {
      if (shatters(f, m)) {
        best = {sz, m};
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  return best;
}

inline int vc_dim(const SetFamily& f) { return vc_dim_witness(f).dim; }

// every shattered subset of [n] with at most max_size elements, ascending
// as integers
inline std::vector<Mask> shattered_sets(const SetFamily& f, int max_size) {
  if (max_size < 0 || max_size > f.n)
    throw std::invalid_argument("shattered_sets: max_size out of range");
  std::vector<Mask> out;
  if (!f.empty()) out.push_back(0);
  for (int sz = 1; sz <= max_size; ++sz) {
    if (f.size() < (std::uint64_t{1} << std::min(sz, 62))) break;
    for (Mask m = full_mask(sz); m != 0; m = next_combination(m, f.n))
      if (shatters(f, m)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vcdelta
