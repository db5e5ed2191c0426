#pragma once

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bit_matrix.hpp"
#include "bits.hpp"
#include "deglex.hpp"
#include "multilinear.hpp"
#include "set_family.hpp"
#include "standard_basis.hpp"

namespace vcdelta {

// g' of the indicator construction: the normal form, over the standard
// monomials of V(F delta F), of the function that is 1 at the origin and 0
// at every other difference. Its degree is bounded by vc_dim(F delta F)
// because every standard monomial's support is a shattered set.
struct IndicatorResult {
  MlPoly g_prime;
  int d_bound = 0;  // vc_dim(F delta F)
  SetFamily delta_family;
};

inline IndicatorResult indicator_poly(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("indicator_poly: empty family");
  SetFamily delta = sym_diff_family(f, f);
  StandardBasis basis = standard_monomials(delta.members, DeglexOrder{f.n});
  std::vector<std::uint8_t> values(delta.size(), 0);
  assert(delta.members.front() == 0);  // the origin is always a difference
  values[0] = 1;
  MlPoly g = basis.normal_form(values);
  return {std::move(g), vc_dim(delta), std::move(delta)};
}

// |F| x |F| matrix of f(v_F, v_G), rows and columns in family order
inline BitMatrix gram_matrix(const PairPoly& f, const SetFamily& fam) {
  assert(f.n == fam.n);
  return pair_evaluations(f, fam.members, fam.members);
}

// Grouping of the reduced polynomial Q into at most 2 C(n, floor(d/2))
// monomial-keyed rank-1 blocks: Q = sum_M x_M g_M(y) + sum_J y_J h_J(x),
// every key a standard monomial of at most floor(d/2) variables. Q itself
// is stored so a checker can replay the decomposition without trusting the
// builder.
struct RankCertificate {
  int n = 0, k = 0, d = 0;
  std::vector<std::pair<Mask, MlPoly>> x_groups;  // key M -> g_M(y)
  std::vector<std::pair<Mask, MlPoly>> y_groups;  // key J -> h_J(x)
  PairPoly reduced;                               // Q

  std::size_t group_count() const { return x_groups.size() + y_groups.size(); }
};

inline RankCertificate rank_certificate(const PairPoly& p, int n, int k, int d,
                                        const StandardBasis* basis = nullptr) {
  if (k < 0 || k > n) throw std::invalid_argument("rank_certificate: bad k");
  if (d < 0 || d > n) throw std::invalid_argument("rank_certificate: bad d");
  if (auto dg = p.degree(); dg && *dg > d)
    throw std::invalid_argument("rank_certificate: deg(P) exceeds d");
  std::optional<StandardBasis> local;
  if (!basis) {
    local.emplace(complete_family_basis(n, k));
    basis = &*local;
  }
  RankCertificate cert;
  cert.n = n;
  cert.k = k;
  cert.d = d;
  cert.reduced = reduce_pair_poly(p, *basis);

  const int half = d / 2;
  // Q is x-major sorted, so x-groups fill with ascending y and, term by
  // term, y-groups see ascending x; both group polynomials come out in
  // canonical order for free.
  std::map<Mask, std::vector<Mask>> gx, gy;
  for (const PairTerm& t : cert.reduced.support) {
    if (set_size(t.x) <= half)
      gx[t.x].push_back(t.y);
    else if (set_size(t.y) <= half)
      gy[t.y].push_back(t.x);
    else
      // impossible for deg(Q) <= d: one side has at most floor(d/2) variables
      throw std::logic_error("rank_certificate: term too heavy on both sides");
  }
  for (auto& [key, terms] : gx)
    cert.x_groups.emplace_back(key, MlPoly{n, std::move(terms)});
  for (auto& [key, terms] : gy) {
    canonicalize_support(terms);  // arrival order is x-deglex already; harmless
    cert.y_groups.emplace_back(key, MlPoly{n, std::move(terms)});
  }
  auto by_key = [](const auto& a, const auto& b) {
    return deglex_less(a.first, b.first);
  };
  std::sort(cert.x_groups.begin(), cert.x_groups.end(), by_key);
  std::sort(cert.y_groups.begin(), cert.y_groups.end(), by_key);
  return cert;
}

// re-expansion of the grouped form, for independent validation against Q
inline PairPoly replay_certificate(const RankCertificate& c) {
  std::vector<PairTerm> terms;
  for (const auto& [m, g] : c.x_groups)
    for (Mask y : g.support) terms.push_back({m, y});
  for (const auto& [j, h] : c.y_groups)
    for (Mask x : h.support) terms.push_back({x, j});
  canonicalize_support(terms);
  return {c.n, std::move(terms)};
}

// every group key must lie in D_{floor(d/2), n}
inline bool certificate_keys_valid(const RankCertificate& c) {
  const int half = c.d / 2;
  for (const auto& [m, g] : c.x_groups)
    if (!in_D(m, half)) return false;
  for (const auto& [j, h] : c.y_groups)
    if (!in_D(j, half)) return false;
  return true;
}

// One uniform-family rank-bound check: hypotheses (uniformity, degree) and
// conclusions (identity Gram matrix, rank = |H|, certificate grouping
// within 2 C(n, floor(d/2)), size within the same bound) are reported
// separately; hypothesis violations are reported, never thrown.
struct UniClpReport {
  int n = 0, d = 0;
  std::optional<int> k;
  std::size_t family_size = 0;
  bool degree_ok = false;
  bool diagonal_nonzero = false;
  bool offdiagonal_zero = false;
  std::size_t gram_rank = 0;
  bool rank_equals_size = false;
  std::uint64_t bound = 0;  // 2 C(n, floor(d/2))
  std::optional<RankCertificate> certificate;
  bool certificate_replay_ok = false;
  bool certificate_keys_ok = false;
  bool group_count_ok = false;
  bool size_within_bound = false;

  bool hypotheses_ok() const {
    return k.has_value() && degree_ok && diagonal_nonzero && offdiagonal_zero;
  }
  bool conclusion_ok() const {
    return rank_equals_size && size_within_bound && certificate &&
           certificate_replay_ok && certificate_keys_ok && group_count_ok;
  }
  // the theorem is contradicted only when the hypotheses hold and a
  // conclusion fails
  bool pass() const { return !hypotheses_ok() || conclusion_ok(); }
};

inline UniClpReport verify_uniclp(const SetFamily& h, const PairPoly& p, int d,
                                  BasisCache* cache = nullptr) {
  if (d < 0 || d > h.n) throw std::invalid_argument("verify_uniclp: bad d");
  UniClpReport rep;
  rep.n = h.n;
  rep.d = d;
  rep.family_size = h.size();
  rep.k = is_uniform(h);
  const auto dg = p.degree();
  rep.degree_ok = !dg || *dg <= d;

  const BitMatrix gram = gram_matrix(p, h);
  rep.diagonal_nonzero = true;
  rep.offdiagonal_zero = true;
  for (std::size_t r = 0; r < gram.rows(); ++r) {
    if (!gram.get(r, r)) rep.diagonal_nonzero = false;
    const std::uint64_t* rw = gram.row(r);
    const std::uint64_t diag_bit = std::uint64_t{1} << (r % 64);
    for (std::size_t w = 0; w < gram.words_per_row(); ++w) {
      const std::uint64_t off = w == r / 64 ? rw[w] & ~diag_bit : rw[w];
      if (off) rep.offdiagonal_zero = false;
    }
  }
  rep.gram_rank = gram.rank();
  rep.rank_equals_size = rep.gram_rank == h.size();
  rep.bound = 2 * binomial(h.n, d / 2);
  rep.size_within_bound = rep.family_size <= rep.bound;

  if (rep.k && rep.degree_ok) {
    std::optional<StandardBasis> local;
    const StandardBasis* basis;
    if (cache)
      basis = &cache->complete(h.n, *rep.k);
    else {
      local.emplace(complete_family_basis(h.n, *rep.k));
      basis = &*local;
    }
    rep.certificate = rank_certificate(p, h.n, *rep.k, d, basis);
    rep.certificate_replay_ok =
        replay_certificate(*rep.certificate) == rep.certificate->reduced;
    rep.certificate_keys_ok = certificate_keys_valid(*rep.certificate);
    rep.group_count_ok = rep.certificate->group_count() <= rep.bound;
  }
  return rep;
}

// Proposition-level consistency check of the GF(2) polynomial-method
// lemma: if deg(P) <= d, P vanishes on every pairwise difference of A, and
// P(0) != 0, then |A| <= 2 sum_{i <= floor(d/2)} C(n,i). The check never
// produces a counterexample; it reports each ingredient.
struct ClpLemmaReport {
  int n = 0, d = 0;
  std::size_t set_size = 0;
  bool degree_ok = false;
  bool hypothesis_holds = false;  // P(a xor b) = 0 for all distinct a,b in A
  int p_at_zero = 0;
  std::uint64_t bound = 0;  // 2 sum_{i <= floor(d/2)} C(n,i)
  bool size_within_bound = false;

  bool consistent() const {
    return !degree_ok || !hypothesis_holds || p_at_zero == 0 ||
           size_within_bound;
  }
};

inline ClpLemmaReport clp_lemma_check(const MlPoly& p, const SetFamily& a,
                                      int d) {
  if (d < 0 || d > a.n) throw std::invalid_argument("clp_lemma_check: bad d");
  ClpLemmaReport rep;
  rep.n = a.n;
  rep.d = d;
  rep.set_size = a.size();
  const auto dg = p.degree();
  rep.degree_ok = !dg || *dg <= d;
  rep.p_at_zero = eval(p, 0);
  rep.hypothesis_holds = true;
  for (std::size_t i = 0; i < a.members.size() && rep.hypothesis_holds; ++i)
    for (std::size_t j = i + 1; j < a.members.size(); ++j)
      if (eval(p, a.members[i] ^ a.members[j])) {
        rep.hypothesis_holds = false;
        break;
      }
  rep.bound = 2 * binomial_sum(a.n, d / 2);
  rep.size_within_bound = rep.set_size <= rep.bound;
  return rep;
}

}  // namespace vcdelta
