#include <gtest/gtest.h>

#include <random>

#include <vcdelta/clp_pipeline.hpp>
#include <vcdelta/extremal_search.hpp>

#include "oracles.hpp"

using namespace vcdelta;

namespace {

Mask mk(std::initializer_list<int> es) {
  Mask m = 0;
  for (int e : es) m |= element_bit(e);
  return m;
}

}  // namespace

// F = {{1},{2}} over [2]: differences {0,{1,2}}, g' = 1 + x2, d = 1
TEST(IndicatorPoly, PinnedTwoSingletons) {
  const SetFamily f(2, {mk({1}), mk({2})});
  const IndicatorResult ind = indicator_poly(f);
  EXPECT_EQ(ind.delta_family.members, (std::vector<Mask>{0, mk({1, 2})}));
  EXPECT_EQ(ind.g_prime.support, (std::vector<Mask>{0, mk({2})}));
  EXPECT_EQ(ind.d_bound, 1);
}

// F = all 1-subsets of [3]: g' = 1 + x3 + x2 + x2 x3, d = 2
TEST(IndicatorPoly, PinnedThreeSingletons) {
  const SetFamily f(3, {mk({1}), mk({2}), mk({3})});
  const IndicatorResult ind = indicator_poly(f);
  EXPECT_EQ(ind.g_prime.support,
            (std::vector<Mask>{0, mk({3}), mk({2}), mk({2, 3})}));
  EXPECT_EQ(ind.d_bound, 2);
}

TEST(IndicatorPoly, DefiningPropertiesRandom) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int k = 1 + static_cast<int>(rng() % n);
    const std::uint64_t pool = binomial(n, k);
    const std::size_t m = 1 + rng() % std::min<std::uint64_t>(pool, 12);
    const SetFamily f = random_uniform_family(n, k, m, rng());
    const IndicatorResult ind = indicator_poly(f);
    // 1 at the origin, 0 on every other pairwise difference
    EXPECT_EQ(eval(ind.g_prime, 0), 1);
    for (Mask t : ind.delta_family.members)
      if (t != 0) EXPECT_EQ(eval(ind.g_prime, t), 0);
    // degree bounded by vc_dim of the difference family
    ASSERT_TRUE(ind.g_prime.degree().has_value());
    EXPECT_LE(*ind.g_prime.degree(), ind.d_bound);
    EXPECT_EQ(ind.d_bound, oracle::vc_dim(ind.delta_family));
  }
  EXPECT_THROW(indicator_poly(SetFamily(3, {})), std::invalid_argument);
}

TEST(GramMatrix, MatchesDirectEvaluation) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<PairTerm> terms;
    for (std::size_t i = 0, tc = 1 + rng() % 12; i < tc; ++i)
      terms.push_back({rng() & full_mask(n), rng() & full_mask(n)});
    const PairPoly f = make_pair_poly(n, std::move(terms));
    std::vector<Mask> mem;
    for (std::size_t i = 0, mc = 1 + rng() % 10; i < mc; ++i)
      mem.push_back(rng() & full_mask(n));
    const SetFamily fam(n, std::move(mem));
    const BitMatrix gram = gram_matrix(f, fam);
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = 0; j < fam.size(); ++j)
        EXPECT_EQ(gram.get(i, j),
                  eval_pair(f, fam.members[i], fam.members[j]) != 0);
  }
}

// the lifted indicator is diagonal on the family: 1 on the diagonal
// because g'(0) = 1, 0 off it because g' kills nonzero differences
TEST(GramMatrix, PipelineGivesIdentity) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % n);
    const std::uint64_t pool = binomial(n, k);
    const std::size_t m = 1 + rng() % std::min<std::uint64_t>(pool, 10);
    const SetFamily f = random_uniform_family(n, k, m, rng());
    const IndicatorResult ind = indicator_poly(f);
    const PairPoly lifted = substitute_sum(ind.g_prime);
    EXPECT_TRUE(gram_matrix(lifted, f).is_identity());
  }
}

// pinned: P = x2 y2 over n=4, k=2, d=2 is already reduced; one x-group
TEST(RankCertificate, PinnedSingleTerm) {
  const PairPoly p{4, {{mk({2}), mk({2})}}};
  const RankCertificate cert = rank_certificate(p, 4, 2, 2);
  EXPECT_EQ(cert.reduced, p);
  ASSERT_EQ(cert.x_groups.size(), 1u);
  EXPECT_EQ(cert.y_groups.size(), 0u);
  EXPECT_EQ(cert.x_groups[0].first, mk({2}));
  EXPECT_EQ(cert.x_groups[0].second, MlPoly::monomial(4, mk({2})));
  EXPECT_EQ(cert.group_count(), 1u);
  EXPECT_TRUE(certificate_keys_valid(cert));
  EXPECT_EQ(replay_certificate(cert), p);
}

TEST(RankCertificate, Validation) {
  const PairPoly p{4, {{mk({1, 2}), mk({1, 2})}}};  // degree 4
  EXPECT_THROW(rank_certificate(p, 4, 2, 2), std::invalid_argument);
  EXPECT_THROW(rank_certificate(p, 4, 5, 4), std::invalid_argument);
  EXPECT_THROW(rank_certificate(p, 4, 2, 5), std::invalid_argument);
}

TEST(RankCertificate, SoundnessRandom) {
  std::mt19937_64 rng(64);
  BasisCache cache;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % n);
    const int d = static_cast<int>(rng() % (n + 1));
    // random polynomial of degree <= d
    std::vector<PairTerm> terms;
    for (std::size_t i = 0, tc = 1 + rng() % 10; i < tc; ++i) {
      Mask x = 0, y = 0;
      for (int b = 0, budget = static_cast<int>(rng() % (d + 1)); b < budget; ++b) {
        const int e = 1 + static_cast<int>(rng() % n);
        if (rng() % 2)
          x |= element_bit(e);
        else
          y |= element_bit(e);
      }
      terms.push_back({x, y});
    }
    const PairPoly p = make_pair_poly(n, std::move(terms));
    if (p.degree() && *p.degree() > d) continue;
    const RankCertificate cert =
        rank_certificate(p, n, k, d, &cache.complete(n, k));
    // replay reproduces Q exactly, keys obey the membership rule, and the
    // group count is within 2 C(n, floor(d/2))
    EXPECT_EQ(replay_certificate(cert), cert.reduced);
    EXPECT_TRUE(certificate_keys_valid(cert));
    EXPECT_LE(cert.group_count(), 2 * binomial(n, d / 2));
    // each group is a rank-1 contribution, so rank(Q's Gram) <= groups
    const SetFamily complete(n, all_subsets_of_size(n, k));
    EXPECT_LE(gram_matrix(cert.reduced, complete).rank(), cert.group_count());
  }
}

TEST(VerifyUniclp, EndToEndSmallRandom) {
  std::mt19937_64 rng(65);
  BasisCache cache;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % n);
    const std::uint64_t pool = binomial(n, k);
    const std::size_t m = 1 + rng() % std::min<std::uint64_t>(pool, 12);
    const SetFamily f = random_uniform_family(n, k, m, rng());
    const IndicatorResult ind = indicator_poly(f);
    const PairPoly lifted = substitute_sum(ind.g_prime);
    const UniClpReport rep = verify_uniclp(f, lifted, ind.d_bound, &cache);
    EXPECT_TRUE(rep.hypotheses_ok());
    EXPECT_TRUE(rep.conclusion_ok());
    EXPECT_TRUE(rep.pass());
    EXPECT_EQ(rep.gram_rank, f.size());
    EXPECT_LE(f.size(), rep.bound);
  }
}

// hypothesis failures are reported, not thrown: a constant polynomial has
// an all-ones Gram matrix on two distinct singletons
TEST(VerifyUniclp, FlagsHypothesisFailure) {
  const SetFamily h(2, {mk({1}), mk({2})});
  const PairPoly p{2, {{0, 0}}};  // constant 1
  const UniClpReport rep = verify_uniclp(h, p, 0);
  EXPECT_TRUE(rep.diagonal_nonzero);
  EXPECT_FALSE(rep.offdiagonal_zero);
  EXPECT_FALSE(rep.hypotheses_ok());
  EXPECT_TRUE(rep.pass());  // vacuously: the theorem's hypotheses fail
  EXPECT_EQ(rep.gram_rank, 1u);
  EXPECT_FALSE(rep.rank_equals_size);
}

TEST(VerifyUniclp, NonUniformSkipsCertificate) {
  const SetFamily h(3, {mk({1}), mk({1, 2})});
  const IndicatorResult ind = indicator_poly(h);
  const PairPoly lifted = substitute_sum(ind.g_prime);
  const UniClpReport rep = verify_uniclp(h, lifted, ind.d_bound);
  EXPECT_FALSE(rep.k.has_value());
  EXPECT_FALSE(rep.certificate.has_value());
  EXPECT_TRUE(rep.diagonal_nonzero);
  EXPECT_TRUE(rep.offdiagonal_zero);
  EXPECT_TRUE(rep.rank_equals_size);
  EXPECT_TRUE(rep.pass());  // uniformity hypothesis fails, so vacuous
}

TEST(VerifyUniclp, ZeroUniformFamily) {
  const SetFamily h(3, {0});
  const IndicatorResult ind = indicator_poly(h);
  const PairPoly lifted = substitute_sum(ind.g_prime);
  const UniClpReport rep = verify_uniclp(h, lifted, ind.d_bound);
  EXPECT_EQ(rep.k, 0);
  EXPECT_EQ(rep.d, 0);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.bound, 2u);
}

TEST(ClpLemma, PipelinePolynomialIsConsistent) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % n);
    const std::uint64_t pool = binomial(n, k);
    const std::size_t m = 1 + rng() % std::min<std::uint64_t>(pool, 10);
    const SetFamily f = random_uniform_family(n, k, m, rng());
    const IndicatorResult ind = indicator_poly(f);
    const ClpLemmaReport rep = clp_lemma_check(ind.g_prime, f, ind.d_bound);
    EXPECT_TRUE(rep.degree_ok);
    EXPECT_TRUE(rep.hypothesis_holds);
    EXPECT_EQ(rep.p_at_zero, 1);
    EXPECT_TRUE(rep.size_within_bound);
    EXPECT_TRUE(rep.consistent());
  }
}

TEST(ClpLemma, ReportsIngredients) {
  // P = 1 never vanishes: hypothesis fails on any set with two points
  const SetFamily a(3, {mk({1}), mk({2})});
  const ClpLemmaReport rep = clp_lemma_check(MlPoly::one(3), a, 1);
  EXPECT_TRUE(rep.degree_ok);
  EXPECT_FALSE(rep.hypothesis_holds);
  EXPECT_TRUE(rep.consistent());
  // degree violations are reported, not thrown
  const ClpLemmaReport rep2 =
      clp_lemma_check(MlPoly::monomial(3, mk({1, 2})), a, 1);
  EXPECT_FALSE(rep2.degree_ok);
  EXPECT_TRUE(rep2.consistent());
}

// theorem main, exhaustively at n=4, k=2: every one of the 63 nonempty
// subfamilies respects 2 C(4, floor(d/2))
TEST(TheoremMain, ExhaustiveND4K2) {
  const auto base = all_subsets_of_size(4, 2);
  ASSERT_EQ(base.size(), 6u);
  std::uint64_t checked = 0;
  BasisCache cache;
  for (std::uint64_t sel = 1; sel < 64; ++sel) {
    std::vector<Mask> mem;
    for (std::uint64_t s = sel; s; s &= s - 1)
      mem.push_back(base[std::countr_zero(s)]);
    const SetFamily f(4, std::move(mem));
    const IndicatorResult ind = indicator_poly(f);
    const PairPoly lifted = substitute_sum(ind.g_prime);
    const UniClpReport rep = verify_uniclp(f, lifted, ind.d_bound, &cache);
    EXPECT_TRUE(rep.hypotheses_ok());
    EXPECT_TRUE(rep.conclusion_ok());
    ++checked;
  }
  EXPECT_EQ(checked, 63u);
}
