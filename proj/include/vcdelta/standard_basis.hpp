#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bit_matrix.hpp"
#include "bits.hpp"
#include "deglex.hpp"
#include "multilinear.hpp"

namespace vcdelta {

// Standard monomials of the vanishing ideal of a 0/1 point set, together
// with the evaluation matrix (points x monomials, always invertible) and
// its inverse. Monomials are found by scanning square-free monomials in
// ascending deglex order and keeping those whose evaluation vector is
// linearly independent of the vectors kept so far; for vanishing ideals of
// point sets this greedy scan yields exactly the deglex Groebner standard
// monomials without ever forming the Groebner basis.
class StandardBasis {
 public:
  int n() const { return n_; }
  const std::vector<Mask>& points() const { return points_; }
  const std::vector<Mask>& monomials() const { return monomials_; }
  const BitMatrix& eval_matrix() const { return eval_; }
  const BitMatrix& inverse_matrix() const { return inv_; }
  int max_degree() const {
    return monomials_.empty() ? 0 : set_size(monomials_.back());
  }
  bool is_standard(Mask m) const {
    return std::binary_search(monomials_.begin(), monomials_.end(), m,
                              [](Mask a, Mask b) { return deglex_less(a, b); });
  }

  // the unique combination h of standard monomials with h(p_i) = values[i]
  MlPoly normal_form(const std::vector<std::uint8_t>& values) const {
    const std::size_t s = points_.size();
    if (values.size() != s)
      throw std::invalid_argument("normal_form: value count != point count");
    std::vector<std::uint64_t> vw((s + 63) / 64, 0);
    for (std::size_t i = 0; i < s; ++i)
      if (values[i]) vw[i / 64] |= std::uint64_t{1} << (i % 64);
    std::vector<Mask> support;
    for (std::size_t j = 0; j < s; ++j) {
      const std::uint64_t* rw = inv_.row(j);
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < vw.size(); ++w) acc ^= rw[w] & vw[w];
      if (std::popcount(acc) & 1) support.push_back(monomials_[j]);
    }
    return {n_, std::move(support)};  // already ascending deglex
  }

  // normal form of the single monomial x_m on the point set
  MlPoly monomial_normal_form(Mask m) const {
    if (is_standard(m)) return MlPoly::monomial(n_, m);
    std::vector<std::uint8_t> values(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
      values[i] = subset_of(m, points_[i]) ? 1 : 0;
    return normal_form(values);
  }

 private:
  friend StandardBasis standard_monomials(std::vector<Mask> points,
                                          DeglexOrder order);
  int n_ = 0;
  std::vector<Mask> points_;
  std::vector<Mask> monomials_;
  BitMatrix eval_;
  BitMatrix inv_;
};

inline StandardBasis standard_monomials(std::vector<Mask> points,
                                        DeglexOrder order) {
  const int n = order.n;
  if (n < 1 || n > kMaxGroundSet)
    throw std::invalid_argument("standard_monomials: bad ground set size");
  if (points.empty())
    throw std::invalid_argument("standard_monomials: empty point set");
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!subset_of(points[i], full_mask(n)))
      throw std::invalid_argument("standard_monomials: point outside {0,1}^n");
    if (i > 0 && points[i] == points[i - 1])
      throw std::invalid_argument("standard_monomials: duplicate point");
  }

  const std::size_t s = points.size();
  const std::size_t wpr = (s + 63) / 64;

  // row-echelon basis of the accepted evaluation vectors; each stored row
  // is reduced against all earlier rows, so one ascending pass reduces any
  // candidate completely at the stored pivots
  std::vector<std::vector<std::uint64_t>> ech;
  std::vector<int> ech_pivot;
  std::vector<Mask> kept;
  BitMatrix eval(s, s);

  std::vector<std::uint64_t> vec(wpr), work(wpr);
  for (int deg = 0; deg <= n && kept.size() < s; ++deg) {
    for_each_deglex_subset(n, deg, /*d_rule=*/false, [&](Mask m) {
      if (kept.size() == s) return;
      std::fill(vec.begin(), vec.end(), 0);
      for (std::size_t i = 0; i < s; ++i)
        if (subset_of(m, points[i])) vec[i / 64] |= std::uint64_t{1} << (i % 64);
      work = vec;
      for (std::size_t r = 0; r < ech.size(); ++r) {
        const int p = ech_pivot[r];
        if ((work[p / 64] >> (p % 64)) & 1)
          for (std::size_t w = 0; w < wpr; ++w) work[w] ^= ech[r][w];
      }
      int pivot = -1;
      for (std::size_t w = 0; w < wpr && pivot < 0; ++w)
        if (work[w]) pivot = static_cast<int>(w * 64 + std::countr_zero(work[w]));
      if (pivot < 0) return;  // dependent: x_m is a leading monomial of the ideal
      const std::size_t col = kept.size();
      for (std::size_t i = 0; i < s; ++i)
        if ((vec[i / 64] >> (i % 64)) & 1) eval.set(i, col, true);
      kept.push_back(m);
      ech.push_back(work);
      ech_pivot.push_back(pivot);
    });
  }
  // square-free monomials span every function on a 0/1 point set, so the
  // scan always completes
  assert(kept.size() == s);

  StandardBasis b;
  b.n_ = n;
  b.points_ = std::move(points);
  b.monomials_ = std::move(kept);
  auto inv = eval.inverse();
  if (!inv)
    throw std::logic_error("standard_monomials: evaluation matrix singular");
  b.eval_ = std::move(eval);
  b.inv_ = std::move(*inv);
  return b;
}

// standard monomials of V([n] choose k), the complete k-uniform family
inline StandardBasis complete_family_basis(int n, int k) {
  return standard_monomials(all_subsets_of_size(n, k), DeglexOrder{n});
}

// memoized complete-family bases keyed by (n, k)
class BasisCache {
 public:
  const StandardBasis& complete(int n, int k) {
    const auto key = std::pair{n, k};
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_
               .emplace(key, std::make_unique<StandardBasis>(
                                 complete_family_basis(n, k)))
               .first;
    return *it->second;
  }

 private:
  std::map<std::pair<int, int>, std::unique_ptr<StandardBasis>> cache_;
};

// Matrix of f(p_i, q_j) over two point lists. The support is grouped by
// x-mask (it is stored x-major), incidence rows of distinct masks are
// computed once, and each group contributes a rank-1 update; this is exact
// GF(2) arithmetic, just batched.
inline BitMatrix pair_evaluations(const PairPoly& f,
                                  const std::vector<Mask>& ps,
                                  const std::vector<Mask>& qs) {
  const std::size_t nr = ps.size(), nc = qs.size();
  const std::size_t wpr = (nc + 63) / 64;
  BitMatrix out(nr, nc);
  std::unordered_map<Mask, std::vector<std::uint64_t>> yrows;
  std::vector<std::uint64_t> acc(wpr);
  std::size_t i = 0;
  while (i < f.support.size()) {
    const Mask x = f.support[i].x;
    std::fill(acc.begin(), acc.end(), 0);
    while (i < f.support.size() && f.support[i].x == x) {
      auto [it, fresh] = yrows.try_emplace(f.support[i].y);
      if (fresh) {
        it->second.assign(wpr, 0);
        for (std::size_t j = 0; j < nc; ++j)
          if (subset_of(f.support[i].y, qs[j]))
            it->second[j / 64] |= std::uint64_t{1} << (j % 64);
      }
      for (std::size_t w = 0; w < wpr; ++w) acc[w] ^= it->second[w];
      ++i;
    }
    for (std::size_t r = 0; r < nr; ++r)
      if (subset_of(x, ps[r])) {
        std::uint64_t* dst = out.row(r);
        for (std::size_t w = 0; w < wpr; ++w) dst[w] ^= acc[w];
      }
  }
  return out;
}

// Rewrites f modulo the vanishing ideal of points x points: the result is
// supported on standard x standard monomial pairs, agrees with f at every
// pair of points, and its degree never exceeds deg(f) (deglex reduction
// can only decrease degrees). Computed through the evaluation matrix
// V = f(p_i, p_j) as C = E^{-1} V E^{-T}, where E is the basis evaluation
// matrix: the product monomial basis is the standard basis of the product
// point set, so C is the unique such representation.
inline PairPoly reduce_pair_poly(const PairPoly& f, const StandardBasis& basis) {
  assert(f.n == basis.n());
  const auto& pts = basis.points();
  const BitMatrix vals = pair_evaluations(f, pts, pts);
  const BitMatrix t = gf2_matmul(basis.inverse_matrix(), vals);
  const BitMatrix c = gf2_matmul_transposed(t, basis.inverse_matrix());
  const auto& mons = basis.monomials();
  std::vector<PairTerm> terms;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c.get(i, j)) terms.push_back({mons[i], mons[j]});
  // monomials are ascending deglex, so the terms come out x-major sorted
  return {f.n, std::move(terms)};
}

}  // namespace vcdelta
