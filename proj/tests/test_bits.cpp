#include <gtest/gtest.h>

#include <vcdelta/bits.hpp>

using namespace vcdelta;

TEST(Bits, FullMaskAndElementBit) {
  EXPECT_EQ(full_mask(1), 0b1u);
  EXPECT_EQ(full_mask(4), 0b1111u);
  EXPECT_EQ(full_mask(64), ~std::uint64_t{0});
  EXPECT_EQ(element_bit(1), 0b1u);
  EXPECT_EQ(element_bit(5), 0b10000u);
}

TEST(Bits, Elements) {
  EXPECT_EQ(elements(0), (std::vector<int>{}));
  EXPECT_EQ(elements(0b1011), (std::vector<int>{1, 2, 4}));
}

TEST(Bits, BitReverse) {
  EXPECT_EQ(bit_reverse(0b0001, 4), 0b1000u);
  EXPECT_EQ(bit_reverse(0b0110, 4), 0b0110u);
  EXPECT_EQ(bit_reverse(0b00101, 5), 0b10100u);
  for (int n : {1, 7, 31, 64}) {
    const Mask m = 0x9e3779b97f4a7c15ULL & full_mask(n);
    EXPECT_EQ(bit_reverse(bit_reverse(m, n), n), m) << n;
  }
}

TEST(Bits, BinomialSmallValues) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(12, 6), 924u);
  EXPECT_EQ(binomial(10, 11), 0u);
  EXPECT_EQ(binomial(10, -1), 0u);
  // largest entry of the table must not have wrapped
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
}

TEST(Bits, BinomialRecurrence) {
  for (int n = 1; n <= 64; ++n)
    for (int k = 1; k <= n; ++k)
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST(Bits, BinomialSum) {
  EXPECT_EQ(binomial_sum(5, -1), 0u);
  EXPECT_EQ(binomial_sum(5, 0), 1u);
  EXPECT_EQ(binomial_sum(5, 2), 1u + 5u + 10u);
  EXPECT_EQ(binomial_sum(5, 5), 32u);
  EXPECT_EQ(binomial_sum(5, 9), 32u);  // clamped at n
}

TEST(Bits, CombinationEnumeration) {
  const auto subsets = all_subsets_of_size(5, 3);
  EXPECT_EQ(subsets.size(), binomial(5, 3));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    EXPECT_EQ(set_size(subsets[i]), 3);
    if (i > 0) EXPECT_LT(subsets[i - 1], subsets[i]);
  }
  EXPECT_EQ(all_subsets_of_size(4, 0), (std::vector<Mask>{0}));
  EXPECT_EQ(all_subsets_of_size(3, 3), (std::vector<Mask>{0b111}));
  // full-width edge: k-subsets of [64] enumeration must terminate
  Mask m = full_mask(3) << 61;  // the numerically largest 3-subset
  EXPECT_EQ(next_combination(m, 64), 0u);
}

TEST(Bits, SubsetOf) {
  EXPECT_TRUE(subset_of(0, 0b101));
  EXPECT_TRUE(subset_of(0b100, 0b101));
  EXPECT_FALSE(subset_of(0b010, 0b101));
}
