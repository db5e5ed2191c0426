#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "bits.hpp"
#include "deglex.hpp"

namespace vcdelta {

namespace detail {

// sort by the given comparator and cancel equal pairs (GF(2) collection)
template <typename T, typename Less>
void collect_mod2(std::vector<T>& v, Less less) {
  std::sort(v.begin(), v.end(), less);
  std::size_t out = 0;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2) v[out++] = v[i];
    i = j;
  }
  v.resize(out);
}

}  // namespace detail

// Multilinear polynomial over GF(2), stored as its support: the set of
// square-free monomials with coefficient 1, ascending deglex.
struct MlPoly {
  int n_vars = 0;
  std::vector<Mask> support;

  static MlPoly zero(int n) { return {n, {}}; }
  static MlPoly one(int n) { return {n, {Mask{0}}}; }
  static MlPoly monomial(int n, Mask m) { return {n, {m}}; }

  bool is_zero() const { return support.empty(); }
  // max degree over the support; the zero polynomial has none
  std::optional<int> degree() const {
    if (support.empty()) return std::nullopt;
    return set_size(support.back());
  }
  friend bool operator==(const MlPoly&, const MlPoly&) = default;
};

inline void canonicalize_support(std::vector<Mask>& s) {
  detail::collect_mod2(s, [](Mask a, Mask b) { return deglex_less(a, b); });
}

inline MlPoly make_ml_poly(int n_vars, std::vector<Mask> terms) {
  canonicalize_support(terms);
  return {n_vars, std::move(terms)};
}

// value at a 0/1 point: a square-free monomial is 1 there exactly when its
// variable set lies inside the point's support
inline int eval(const MlPoly& p, Mask point) {
  int acc = 0;
  for (Mask m : p.support) acc ^= subset_of(m, point) ? 1 : 0;
  return acc;
}

inline MlPoly add(const MlPoly& p, const MlPoly& q) {
  assert(p.n_vars == q.n_vars);
  std::vector<Mask> out;
  out.reserve(p.support.size() + q.support.size());
  std::size_t i = 0, j = 0;
  while (i < p.support.size() && j < q.support.size()) {
    const Mask a = p.support[i], b = q.support[j];
    if (a == b) {
      ++i;
      ++j;
    } else if (deglex_less(a, b)) {
      out.push_back(a);
      ++i;
    } else {
      out.push_back(b);
      ++j;
    }
  }
  out.insert(out.end(), p.support.begin() + i, p.support.end());
  out.insert(out.end(), q.support.begin() + j, q.support.end());
  return {p.n_vars, std::move(out)};
}

// product with the idempotent reduction x_i^2 = x_i: monomials combine by
// bitwise OR, coefficients collected mod 2
inline MlPoly multiply(const MlPoly& p, const MlPoly& q) {
  assert(p.n_vars == q.n_vars);
  std::vector<Mask> out;
  out.reserve(p.support.size() * q.support.size());
  for (Mask a : p.support)
    for (Mask b : q.support) out.push_back(a | b);
  canonicalize_support(out);
  return {p.n_vars, std::move(out)};
}

// one monomial x_A y_B of the doubled variable ring
struct PairTerm {
  Mask x = 0;
  Mask y = 0;
  friend bool operator==(const PairTerm&, const PairTerm&) = default;
};

inline bool pair_less(const PairTerm& a, const PairTerm& b) {
  if (a.x != b.x) return deglex_less(a.x, b.x);
  return deglex_less(a.y, b.y);
}

// Polynomial over the doubled ring F2[x_1..x_n, y_1..y_n], multilinear in
// every variable; support sorted x-major by deglex.
struct PairPoly {
  int n = 0;
  std::vector<PairTerm> support;

  static PairPoly zero(int n) { return {n, {}}; }
  std::optional<int> degree() const {
    std::optional<int> d;
    for (const PairTerm& t : support) {
      const int dt = set_size(t.x) + set_size(t.y);
      if (!d || dt > *d) d = dt;
    }
    return d;
  }
  friend bool operator==(const PairPoly&, const PairPoly&) = default;
};

inline void canonicalize_support(std::vector<PairTerm>& s) {
  detail::collect_mod2(s, pair_less);
}

inline PairPoly make_pair_poly(int n, std::vector<PairTerm> terms) {
  canonicalize_support(terms);
  return {n, std::move(terms)};
}

inline int eval_pair(const PairPoly& f, Mask u, Mask v) {
  int acc = 0;
  for (const PairTerm& t : f.support)
    acc ^= (subset_of(t.x, u) && subset_of(t.y, v)) ? 1 : 0;
  return acc;
}

// g(x + y): each monomial x_M becomes prod_{i in M} (x_i + y_i), i.e. the
// sum over A subset of M of x_A y_{M\A}. Terms coming from different
// monomials never coincide (x|y recovers M), so beyond ordering no
// collection is needed and the expansion is cancellation-free.
inline PairPoly substitute_sum(const MlPoly& g) {
  std::vector<PairTerm> out;
  std::size_t total = 0;
  for (Mask m : g.support) total += std::size_t{1} << set_size(m);
  out.reserve(total);
  for (Mask m : g.support) {
    Mask a = m;
    while (true) {
      out.push_back({a, m ^ a});
      if (a == 0) break;
      a = (a - 1) & m;
    }
  }
  std::sort(out.begin(), out.end(), pair_less);
  return {g.n_vars, std::move(out)};
}

}  // namespace vcdelta
