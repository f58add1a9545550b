#include <gtest/gtest.h>

#include "apnp/boolmat.hpp"
#include "support/brute.hpp"

namespace apnp {
namespace {

BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  BitMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.assign(r, c, rows[r][c] != 0);
  }
  return m;
}

TEST(MulCount, IdentityTimesB) {
  Rng rng(1);
  const BitMatrix b = testing::random_bits(rng, 5, 7, 0.5);
  BitMatrix id(5, 5);
  for (std::size_t i = 0; i < 5; ++i) id.set(i, i);
  const CountMatrix c = mul_count(id, b);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(c.at(i, j), b.get(i, j) ? 1U : 0U);
  }
}

TEST(MulCount, TwoByTwo) {
  const CountMatrix c = mul_count(from_rows({{1, 0}, {1, 1}}), from_rows({{1, 1}, {0, 1}}));
  EXPECT_EQ(c.at(0, 0), 1U);
  EXPECT_EQ(c.at(0, 1), 1U);
  EXPECT_EQ(c.at(1, 0), 1U);
  EXPECT_EQ(c.at(1, 1), 2U);
}

TEST(MulCount, AllOnesCountsInnerDimension) {
  for (auto kernel : {Kernel::Packed, Kernel::Strassen}) {
    BitMatrix a(3, 70);
    BitMatrix b(70, 4);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 70; ++k) a.set(i, k);
    }
    for (std::size_t k = 0; k < 70; ++k) {
      for (std::size_t j = 0; j < 4; ++j) b.set(k, j);
    }
    const CountMatrix c = mul_count(a, b, MatmulOptions{kernel, 0});
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(c.at(i, j), 70U);
    }
  }
}

TEST(MulCount, DimensionMismatchThrows) {
  EXPECT_THROW(mul_count(BitMatrix(2, 3), BitMatrix(4, 2)), std::invalid_argument);
}

TEST(MulCount, ExhaustiveTwoByTwoBlocks) {
  for (unsigned x = 0; x < 16; ++x) {
    for (unsigned y = 0; y < 16; ++y) {
      BitMatrix a(2, 2);
      BitMatrix b(2, 2);
      for (unsigned bit = 0; bit < 4; ++bit) {
        a.assign(bit / 2, bit % 2, ((x >> bit) & 1U) != 0);
        b.assign(bit / 2, bit % 2, ((y >> bit) & 1U) != 0);
      }
      for (auto kernel : {Kernel::Packed, Kernel::Strassen}) {
        EXPECT_EQ(mul_count(a, b, MatmulOptions{kernel, 0}), testing::naive_product(a, b));
      }
    }
  }
}

TEST(MulCount, RandomRectangularAgainstTripleLoop) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng.below(150);
    const std::size_t k = 1 + rng.below(150);
    const std::size_t c = 1 + rng.below(150);
    const BitMatrix a = testing::random_bits(rng, r, k, rng.unit());
    const BitMatrix b = testing::random_bits(rng, k, c, rng.unit());
    const CountMatrix expect = testing::naive_product(a, b);
    for (auto kernel : {Kernel::Packed, Kernel::Strassen}) {
      EXPECT_EQ(mul_count(a, b, MatmulOptions{kernel, 0}), expect);
    }
  }
}

TEST(MulCount, BlockSizeIsInvisible) {
  Rng rng(4);
  const BitMatrix a = testing::random_bits(rng, 130, 200, 0.3);
  const BitMatrix b = testing::random_bits(rng, 200, 90, 0.3);
  const CountMatrix base = mul_count(a, b);
  for (std::size_t block : {1U, 64U, 100U, 128U, 512U}) {
    EXPECT_EQ(mul_count(a, b, MatmulOptions{Kernel::Packed, block}), base);
    EXPECT_EQ(mul_count(a, b, MatmulOptions{Kernel::Strassen, block}), base);
  }
}

TEST(SquareKernel, SmallCases) {
  BitMatrix one(1, 1);
  one.set(0, 0);
  EXPECT_EQ(square_kernel(one, one).at(0, 0), 1U);
  Rng rng(6);
  const BitMatrix zero(64, 64);
  const BitMatrix any = testing::random_bits(rng, 64, 64, 0.5);
  EXPECT_EQ(square_kernel(zero, any), CountMatrix(64, 64));
  const BitMatrix x = testing::random_bits(rng, 64, 64, 0.5);
  for (auto kernel : {Kernel::Packed, Kernel::Strassen}) {
    EXPECT_EQ(square_kernel(x, any, kernel), testing::naive_product(x, any));
  }
  EXPECT_THROW(square_kernel(BitMatrix(2, 3), BitMatrix(3, 2)), std::invalid_argument);
}

TEST(Kernel, NamesAndExponents) {
  EXPECT_EQ(parse_kernel("packed"), Kernel::Packed);
  EXPECT_EQ(parse_kernel("strassen"), Kernel::Strassen);
  EXPECT_FALSE(parse_kernel("gpu"));
  EXPECT_EQ(kernel_name(Kernel::Strassen), "strassen");
  EXPECT_DOUBLE_EQ(effective_exponent(Kernel::Packed), 3.0);
  EXPECT_NEAR(effective_exponent(Kernel::Strassen), 2.807, 1e-9);
}

TEST(BitMatrix, TransposeAndCount) {
  Rng rng(9);
  const BitMatrix a = testing::random_bits(rng, 70, 130, 0.4);
  const BitMatrix t = a.transpose();
  EXPECT_EQ(t.rows(), 130U);
  EXPECT_EQ(t.count(), a.count());
  for (std::size_t r = 0; r < 70; ++r) {
    for (std::size_t c = 0; c < 130; ++c) EXPECT_EQ(a.get(r, c), t.get(c, r));
  }
  EXPECT_EQ(t.transpose(), a);
}

}  // namespace
}  // namespace apnp
