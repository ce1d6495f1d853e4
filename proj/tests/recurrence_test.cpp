#include <cstdint>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "autmg/errors.hpp"
#include "autmg/recurrence.hpp"

using namespace autmg;

namespace {
Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }
} // namespace

TEST(ComputeI, Examples)
{
  EXPECT_EQ(compute_I(1, 0), R(1));
  EXPECT_EQ(compute_I(3, -1), R(0));
  // 2 vertices, 3 edges: triple edge 1/12, double edge + loop 1/4,
  // edge + two loops on one side 1/8, edge + a loop on each side 1/8.
  EXPECT_EQ(compute_I(2, 2), R(1, 12) + R(1, 4) + R(1, 8) + R(1, 8));
  EXPECT_EQ(compute_I(2, 2), R(7, 12));
  // path 1/2 + star 1/6
  EXPECT_EQ(compute_I(4, 0), R(2, 3));
}

TEST(ComputeI, SingleVertexRowIsLoopWeights)
{
  // One vertex with k loops: 1 / (2^k k!)
  for (std::int64_t k = 0; k <= 10; ++k)
    EXPECT_EQ(compute_I(1, k), Rational(1) / Rational(ipower(Integer(2), static_cast<std::uint64_t>(k)) * factorial(k)));
}

TEST(ComputeJ, Examples)
{
  EXPECT_EQ(compute_J(1, 7), R(1));
  EXPECT_EQ(compute_J(2, 0), R(1, 2));
  // 3! (3/2 + 1 + 1/3) and the n=3 exponential sum at k=1
  EXPECT_EQ(compute_J(3, 1), R(6) * (R(3, 2) + R(1) + R(1, 3)));
  EXPECT_EQ(compute_J(3, 1), R(-125, 8) + R(9, 4) + R(243, 8));
  EXPECT_EQ(compute_J(3, 1), R(17));
  EXPECT_EQ(compute_J(4, 1), R(142));
}

TEST(ComputeJ, SecondRowMatchesClosedFormByInduction)
{
  // J(2,k) = 4J(2,k-1) + 2^{k-1} solves to 4^k - 2^{k-1}
  for (std::int64_t k = 0; k <= 12; ++k) EXPECT_EQ(compute_J(2, k), power(R(4), k) - power(R(2), k - 1));
}

TEST(Recurrence, BoundaryIsZero)
{
  for (std::int64_t n = -3; n <= 5; ++n)
    for (std::int64_t k = -4; k <= 5; ++k) {
      if (n >= 1 && k >= 0) continue;
      EXPECT_EQ(compute_I(n, k), R(0)) << n << "," << k;
      EXPECT_EQ(compute_J(n, k), R(0)) << n << "," << k;
    }
}

TEST(Recurrence, RowOneOfJIsAllOnes)
{
  for (std::int64_t k = 0; k <= 12; ++k) EXPECT_EQ(compute_J(1, k), R(1));
}

TEST(Recurrence, NormalizationHoldsBetweenIndependentRecurrences)
{
  IRecurrence i_memo;
  JRecurrence j_memo;
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t k = 0; k <= 12; ++k)
      EXPECT_EQ(j_memo.at(n, k), Rational(normalization_factor(n, k)) * i_memo.at(n, k)) << n << "," << k;
}

TEST(Recurrence, FillOrderIsByAntiDiagonal)
{
  const auto order = IRecurrence::fill_order(3);
  const std::vector<std::pair<std::int64_t, std::int64_t>> expected{{1, 0}, {1, 1}, {2, 0}, {1, 2}, {2, 1}, {3, 0}};
  EXPECT_EQ(order, expected);
}

TEST(Recurrence, RuleReadingForwardIsRejected)
{
  auto bad_rule = [](std::int64_t n, std::int64_t k, auto&& lookup) -> Rational {
    if (n == 1 && k == 0) return Rational(1);
    return lookup(n, k); // same diagonal: not well-founded
  };
  DiagonalMemo<decltype(bad_rule)> memo(bad_rule);
  EXPECT_EQ(memo.at(1, 0), R(1));
  EXPECT_THROW(memo.at(1, 1), consistency_error);
}

TEST(BuildTable, Examples)
{
  const auto single = build_table(1, 0);
  EXPECT_EQ(single.I(1, 0), R(1));
  EXPECT_EQ(single.J(1, 0), R(1));

  const auto small = build_table(2, 2);
  EXPECT_EQ(small.I(2, 0), R(1, 2));
  EXPECT_EQ(small.I(2, 1), R(3, 4));
  EXPECT_EQ(small.I(2, 2), R(7, 12));

  const auto four = build_table(4, 4);
  EXPECT_EQ(four.J(1, 0), R(1));
  EXPECT_EQ(four.J(2, 0), R(1, 2));
  EXPECT_EQ(four.J(3, 0), R(1));
  EXPECT_EQ(four.J(4, 0), R(4));
  EXPECT_TRUE(four.normalization_violations().empty());
  EXPECT_THROW((void)four.I(5, 0), std::out_of_range);
}

TEST(BuildTable, RejectsBadBounds)
{
  EXPECT_THROW(build_table(0, 3), std::domain_error);
  EXPECT_THROW(build_table(3, -1), std::domain_error);
}
