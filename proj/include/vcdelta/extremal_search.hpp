#pragma once

#include <algorithm>
#include <cassert>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bits.hpp"
#include "set_family.hpp"
#include "theorem_bounds.hpp"

namespace vcdelta {

// m distinct k-subsets of [n], drawn uniformly by a partial Fisher-Yates
// shuffle of the full combination list; identical seeds give identical
// families.
inline SetFamily random_uniform_family(int n, int k, std::size_t m,
                                       std::uint64_t seed) {
  if (k < 0 || k > n)
    throw std::invalid_argument("random_uniform_family: bad k");
  const std::uint64_t count = binomial(n, k);
  if (count > (std::uint64_t{1} << 22))
    throw std::invalid_argument("random_uniform_family: C(n,k) too large");
  if (m > count)
    throw std::invalid_argument("random_uniform_family: m exceeds C(n,k)");
  std::vector<Mask> pool = all_subsets_of_size(n, k);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + rng() % (pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  return SetFamily(n, std::move(pool));
}

// Incrementally maintained F delta F: ordered-pair counts per XOR value
// make removals exact; the distinct key list is kept sorted for scans.
class DeltaTracker {
 public:
  explicit DeltaTracker(int n) : n_(n) {}

  const std::vector<Mask>& family() const { return members_; }
  const std::vector<Mask>& delta_members() const { return keys_; }
  SetFamily family_as_set() const { return SetFamily(n_, members_); }
  SetFamily delta_family() const { return SetFamily(n_, keys_); }
  bool member(Mask f) const {
    return std::find(members_.begin(), members_.end(), f) != members_.end();
  }

  void add(Mask f) {
    bump(0, +1);
    for (Mask y : members_) bump(f ^ y, +2);
    members_.push_back(f);
  }

  void remove(Mask f) {
    auto it = std::find(members_.begin(), members_.end(), f);
    assert(it != members_.end());
    members_.erase(it);
    bump(0, -1);
    for (Mask y : members_) bump(f ^ y, -2);
  }

 private:
  void bump(Mask key, int delta) {
    std::int64_t& c = count_[key];
    const bool was = c > 0;
    c += delta;
    assert(c >= 0);
    const bool now = c > 0;
    if (was == now) return;
    if (now) {
      keys_.insert(std::lower_bound(keys_.begin(), keys_.end(), key), key);
    } else {
      keys_.erase(std::lower_bound(keys_.begin(), keys_.end(), key));
      count_.erase(key);
    }
  }

  int n_;
  std::vector<Mask> members_;
  std::vector<Mask> keys_;  // XOR values with positive pair count, sorted
  std::unordered_map<Mask, std::int64_t> count_;
};

struct SearchStrategy {
  int stall_limit = 25;      // consecutive failed adds before a perturbation
  int max_remove = 2;        // members removed per perturbation
  double temperature = 0.0;  // extra chance in [0,1] of perturbing after any failed add
};

struct BestRecord {
  std::uint64_t move = 0;
  std::size_t size = 0;
};

struct SearchState {
  int n = 0, k = 0, d = 0;
  std::uint64_t seed = 0;
  SearchStrategy strategy;
  std::uint64_t budget = 0;
  std::uint64_t moves_used = 0;
  SetFamily current;
  SetFamily best;
  std::size_t best_size = 0;
  std::vector<BestRecord> history;  // every new record, for replay
  int r = 0;
  std::uint64_t main_bound = 0;        // 2 C(n, floor(d/2))
  std::uint64_t conjecture_bound = 0;  // 2^r C(n-r, floor(d/2))
  bool main_bound_respected = true;    // proved; false means a toolkit bug
  bool conjecture_exceeded = false;    // would refute the conjecture
  bool records_verified = true;        // each record re-checked from scratch
};

namespace detail {

// vc_dim(keys) <= d, i.e. no (d+1)-subset of [n] is shattered. The caller
// keeps the last shattered subset as a cache: rejected moves tend to fail
// on the same witness.
inline bool vc_within(const std::vector<Mask>& keys, int n, int d,
                      Mask& cached_witness) {
  if (d >= n) return true;
  const int target = d + 1;
  if (target >= 63 ||
      keys.size() < (std::uint64_t{1} << target))
    return true;
  if (cached_witness != 0 && masks_shatter(keys, cached_witness)) return false;
  for (Mask m = full_mask(target); m != 0; m = next_combination(m, n))
    if (masks_shatter(keys, m)) {
      cached_witness = m;
      return false;
    }
  return true;
}

}  // namespace detail

// Randomized greedy growth of a k-uniform family keeping
// vc_dim(F delta F) <= d, with stall-triggered removals (and, when
// temperature > 0, extra random perturbations). Every new record is
// re-verified from scratch before being stored. Budget counts attempted
// moves; exhausting it is normal termination, as is saturating at the
// complete family.
inline SearchState search_extremal(int n, int k, int d, SearchStrategy strategy,
                                   std::uint64_t budget, std::uint64_t seed) {
  if (!(0 < k && k < n))
    throw std::invalid_argument("search_extremal: need 0 < k < n");
  if (!(0 <= d && d < n))
    throw std::invalid_argument("search_extremal: need 0 <= d < n");
  if (binomial(n, k) > (std::uint64_t{1} << 22))
    throw std::invalid_argument("search_extremal: C(n,k) too large");

  SearchState st;
  st.n = n;
  st.k = k;
  st.d = d;
  st.seed = seed;
  st.strategy = strategy;
  st.budget = budget;
  st.r = d % 2;
  st.main_bound = 2 * binomial(n, d / 2);
  st.conjecture_bound = (std::uint64_t{1} << st.r) * binomial(n - st.r, d / 2);

  const std::vector<Mask> pool = all_subsets_of_size(n, k);
  std::mt19937_64 rng(seed);
  DeltaTracker tracker(n);
  tracker.add(pool[rng() % pool.size()]);

  const auto record_best = [&] {
    // never trust the incremental state: rebuild and re-measure
    const SetFamily fam = tracker.family_as_set();
    const SetFamily delta = sym_diff_family(fam, fam);
    if (vc_dim(delta) > d) {
      st.records_verified = false;
      return;
    }
    st.best = fam;
    st.best_size = fam.size();
    st.history.push_back({st.moves_used, st.best_size});
    if (st.best_size > st.main_bound) st.main_bound_respected = false;
    if (st.best_size > st.conjecture_bound) st.conjecture_exceeded = true;
  };
  record_best();

  int stall = 0;
  Mask cached_witness = 0;
  std::vector<Mask> fresh, merged;
  while (st.moves_used < budget) {
    ++st.moves_used;
    if (tracker.family().size() == pool.size()) break;  // complete family
    Mask cand;
    do {
      cand = pool[rng() % pool.size()];
    } while (tracker.member(cand));

    // keys of F' delta F' for F' = F + cand: old keys plus cand^y and 0
    fresh.clear();
    const auto& keys = tracker.delta_members();
    for (Mask y : tracker.family()) {
      const Mask x = cand ^ y;
      if (!std::binary_search(keys.begin(), keys.end(), x)) fresh.push_back(x);
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    merged.resize(keys.size() + fresh.size());
    std::merge(keys.begin(), keys.end(), fresh.begin(), fresh.end(),
               merged.begin());

    if (detail::vc_within(merged, n, d, cached_witness)) {
      tracker.add(cand);
      stall = 0;
      if (tracker.family().size() > st.best_size) record_best();
    } else {
      ++stall;
      bool perturb = stall >= strategy.stall_limit;
      if (!perturb && strategy.temperature > 0)
        perturb = (rng() % 1000000) <
                  static_cast<std::uint64_t>(strategy.temperature * 1e6);
      if (perturb && tracker.family().size() > 1) {
        const int nr = 1 + static_cast<int>(rng() % std::max(1, strategy.max_remove));
        for (int t = 0; t < nr && tracker.family().size() > 1; ++t) {
          const std::size_t idx = rng() % tracker.family().size();
          tracker.remove(tracker.family()[idx]);
        }
        stall = 0;
      }
    }
  }
  st.current = tracker.family_as_set();
  return st;
}

}  // namespace vcdelta
