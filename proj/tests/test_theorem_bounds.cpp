#include <gtest/gtest.h>

#include <random>

#include <vcdelta/extremal_search.hpp>
#include <vcdelta/theorem_bounds.hpp>

#include "oracles.hpp"

using namespace vcdelta;

namespace {

Mask mk(std::initializer_list<int> es) {
  Mask m = 0;
  for (int e : es) m |= element_bit(e);
  return m;
}

}  // namespace

TEST(TheoremBound, ClosedForms) {
  // 2 sum_{i<=2} C(6,i) = 2 (1+6+15) = 44
  EXPECT_EQ(theorem_bound(Theorem::dvir, 6, 4), 44u);
  EXPECT_EQ(theorem_bound(Theorem::dvir, 6, 5), 44u);  // floor(5/2) = 2
  // r=0: sum_{i<=1} C(6,i) = 7; r=1: 2 sum_{i<=1} C(5,i) = 12
  EXPECT_EQ(theorem_bound(Theorem::kang, 6, 2), 7u);
  EXPECT_EQ(theorem_bound(Theorem::kang, 6, 3), 12u);
  EXPECT_EQ(theorem_bound(Theorem::kleitman, 6, 2), 7u);
  // 2 C(6,2) = 30
  EXPECT_EQ(theorem_bound(Theorem::main, 6, 4), 30u);
  EXPECT_EQ(theorem_bound(Theorem::main, 6, 5), 30u);
  // sum_{i<=2} C(6,i) = 22
  EXPECT_EQ(theorem_bound(Theorem::sauer, 6, 2), 22u);
  // empty-family convention
  EXPECT_EQ(theorem_bound(Theorem::dvir, 6, -1), 0u);
}

TEST(TheoremBound, OrderingAcrossStatements) {
  for (int n = 1; n <= 16; ++n)
    for (int d = 0; d <= n; ++d) {
      EXPECT_LE(theorem_bound(Theorem::kang, n, d),
                theorem_bound(Theorem::dvir, n, d));
      EXPECT_LE(theorem_bound(Theorem::main, n, d),
                theorem_bound(Theorem::dvir, n, d));
      // the conjectured refinement sits below the uniform theorem's bound
      const int r = d % 2;
      EXPECT_LE((std::uint64_t{1} << r) * binomial(n - r, d / 2),
                theorem_bound(Theorem::main, n, d));
    }
}

TEST(CheckBound, NameRoundTrip) {
  for (Theorem t : {Theorem::dvir, Theorem::kang, Theorem::kleitman,
                    Theorem::main, Theorem::sauer})
    EXPECT_EQ(theorem_from_name(theorem_name(t)), t);
  EXPECT_FALSE(theorem_from_name("nope").has_value());
}

TEST(CheckBound, EmptyAndErrors) {
  const SetFamily empty(4, {});
  for (Theorem t : {Theorem::dvir, Theorem::kang, Theorem::kleitman, Theorem::sauer}) {
    const BoundReport rep = check_bound(empty, t);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.d, -1);
  }
  EXPECT_THROW(check_bound(empty, Theorem::main), std::invalid_argument);
  EXPECT_THROW(check_bound(SetFamily(3, {0, mk({1})}), Theorem::main),
               std::invalid_argument);
}

TEST(CheckBound, ParametersMatchDefinitions) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Mask> mem;
    for (std::size_t i = 0, mc = 1 + rng() % 14; i < mc; ++i)
      mem.push_back(rng() & full_mask(n));
    const SetFamily f(n, std::move(mem));
    const SetFamily delta = sym_diff_family(f, f);

    const BoundReport dvir = check_bound(f, Theorem::dvir);
    EXPECT_EQ(dvir.d, oracle::vc_dim(delta));
    EXPECT_TRUE(shatters(delta, dvir.witness));
    EXPECT_EQ(set_size(dvir.witness), dvir.d);
    EXPECT_EQ(dvir.bound, theorem_bound(Theorem::dvir, n, dvir.d));

    const BoundReport klei = check_bound(f, Theorem::kleitman);
    int dmax = 0;
    for (Mask m : delta.members) dmax = std::max(dmax, set_size(m));
    EXPECT_EQ(klei.d, dmax);
    EXPECT_EQ(set_size(klei.witness), dmax);
    EXPECT_TRUE(delta.contains(klei.witness));
    EXPECT_EQ(klei.hypothesis_ok, dmax >= 1 && dmax < n);

    const BoundReport sauer = check_bound(f, Theorem::sauer);
    EXPECT_EQ(sauer.d, oracle::vc_dim(f));
    EXPECT_EQ(sauer.r, sauer.d % 2);

    const BoundReport kang = check_bound(f, Theorem::kang);
    EXPECT_EQ(kang.d, dvir.d);
    EXPECT_EQ(kang.hypothesis_ok, kang.d >= 1 && kang.d < n);
  }
}

// Hamming ball of radius 1: center plus its n single-bit flips. Every
// pairwise difference has at most 2 elements, |F| = n+1 meets the d=2,
// r=0 bound 1 + n exactly.
TEST(CheckBound, KleitmanBallEquality) {
  std::mt19937_64 rng(72);
  for (int n = 3; n <= 12; ++n) {
    const Mask center = rng() & full_mask(n);
    std::vector<Mask> mem = {center};
    for (int i = 1; i <= n; ++i) mem.push_back(center ^ element_bit(i));
    const SetFamily ball(n, std::move(mem));
    const BoundReport rep = check_bound(ball, Theorem::kleitman);
    EXPECT_EQ(rep.d, 2);
    EXPECT_EQ(rep.r, 0);
    EXPECT_TRUE(rep.hypothesis_ok);
    EXPECT_EQ(rep.bound, static_cast<std::uint64_t>(n) + 1);
    EXPECT_EQ(rep.family_size, static_cast<std::size_t>(n) + 1);
    EXPECT_TRUE(rep.pass);
  }
}

TEST(ExhaustiveVerify, PinnedCounts) {
  const ExhaustiveSummary dvir31 = exhaustive_verify(3, 1, Theorem::dvir);
  EXPECT_EQ(dvir31.families_checked, 7u);  // 2^3 - 1 nonempty subfamilies
  EXPECT_EQ(dvir31.violations, 0u);

  const ExhaustiveSummary main42 = exhaustive_verify(4, 2, Theorem::main);
  EXPECT_EQ(main42.families_checked, 63u);
  EXPECT_EQ(main42.violations, 0u);
  EXPECT_GT(main42.max_ratio, 0.0);
  EXPECT_LE(main42.max_ratio, 1.0);

  const ExhaustiveSummary main52 = exhaustive_verify(5, 2, Theorem::main);
  EXPECT_EQ(main52.families_checked, 1023u);
  EXPECT_EQ(main52.violations, 0u);
}

TEST(ExhaustiveVerify, AllStatementsSmallGrid) {
  for (Theorem t : {Theorem::dvir, Theorem::kang, Theorem::kleitman,
                    Theorem::main, Theorem::sauer})
    for (int n = 2; n <= 4; ++n)
      for (int k = 1; k < n; ++k) {
        const ExhaustiveSummary sum = exhaustive_verify(n, k, t);
        EXPECT_EQ(sum.violations, 0u) << theorem_name(t) << " " << n << " " << k;
        EXPECT_EQ(sum.families_checked,
                  (std::uint64_t{1} << binomial(n, k)) - 1);
      }
}

TEST(ExhaustiveVerify, RefusesHugeInstances) {
  EXPECT_THROW(exhaustive_verify(7, 3, Theorem::dvir), std::invalid_argument);
}

// the worst family reported really attains the reported ratio
TEST(ExhaustiveVerify, WorstFamilyConsistent) {
  const ExhaustiveSummary sum = exhaustive_verify(4, 2, Theorem::main);
  const BoundReport rep = check_bound(sum.worst, Theorem::main);
  EXPECT_TRUE(rep.hypothesis_ok);
  EXPECT_DOUBLE_EQ(static_cast<double>(rep.family_size) / rep.bound,
                   sum.max_ratio);
}
