#include <gtest/gtest.h>

#include "oracles.hpp"
#include "proot/order.hpp"

namespace proot {
namespace {

FieldElement fe(std::uint64_t v, std::uint64_t p) { return FieldElement(v, Prime(p)); }

std::vector<std::uint64_t> residues(const PowerTrace& t) {
  std::vector<std::uint64_t> out;
  for (const auto& e : t.entries) out.push_back(e.residue());
  return out;
}

TEST(OrderTest, AllPowersExamples) {
  EXPECT_EQ(residues(all_powers(fe(2, 5))), (std::vector<std::uint64_t>{2, 4, 3, 1}));
  EXPECT_EQ(residues(all_powers(fe(1, 7))), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(residues(all_powers(fe(2, 7))), (std::vector<std::uint64_t>{2, 4, 1}));
  EXPECT_EQ(all_powers(fe(2, 7)).base, fe(2, 7));
}

TEST(OrderTest, ZeroHasNoTrace) {
  EXPECT_THROW(all_powers(fe(0, 7)), ZeroDivisionError);
  EXPECT_THROW(order(fe(0, 7)), ZeroDivisionError);
  EXPECT_THROW(order_fast(fe(0, 7)), ZeroDivisionError);
}

TEST(OrderTest, OrderExamples) {
  EXPECT_EQ(order(fe(2, 7)), 3u);
  EXPECT_EQ(order(fe(3, 7)), 6u);
  for (std::uint64_t p : {2, 3, 101, 211}) EXPECT_EQ(order(fe(1, p)), 1u);
  EXPECT_EQ(order(fe(1, 2)), 1u);
}

TEST(OrderTest, OrderMatchesBruteForce) {
  for (std::uint64_t p : primes_up_to(211)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const std::uint64_t ord = order(fe(a, p));
      ASSERT_EQ(ord, oracle::order(a, p)) << a << " mod " << p;
      ASSERT_GE(ord, 1u);
      ASSERT_LE(ord, p - 1);
      ASSERT_EQ(order_fast(fe(a, p)), ord) << a << " mod " << p;
    }
  }
}

TEST(OrderTest, OrderFastHandlesLargeModulus) {
  const Prime p(2147483647);
  EXPECT_EQ(order_fast(FieldElement(1, p)), 1u);
  EXPECT_EQ(order_fast(FieldElement(p.value() - 1, p)), 2u);
  // 7 is the classic generator of the Mersenne prime 2^31 - 1.
  EXPECT_EQ(order_fast(FieldElement(7, p)), p.value() - 1);
}

TEST(OrderTest, ExistsSmallerPower) {
  EXPECT_FALSE(exists_smaller_power_eq_1(fe(2, 7), 3));
  EXPECT_FALSE(exists_smaller_power_eq_1(fe(5, 11), 1));
  EXPECT_TRUE(exists_smaller_power_eq_1(fe(2, 7), 6));
  EXPECT_FALSE(exists_smaller_power_eq_1(fe(0, 7), 1000000));
}

TEST(OrderTest, SmallestPowerEqualToOneIsOrder) {
  for (std::uint64_t p : primes_up_to(97)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const FieldElement x = fe(a, p);
      for (std::uint64_t n = 1; n <= 2 * p; ++n) {
        if (field_pow(x, n).residue() == 1 && !exists_smaller_power_eq_1(x, n)) ASSERT_EQ(order(x), n);
      }
    }
  }
}

TEST(OrderTest, OrderDividesGroupOrderAndInverseKeepsOrder) {
  for (std::uint64_t p : primes_up_to(211)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const FieldElement x = fe(a, p);
      ASSERT_TRUE(divides(order(x), p - 1));
      ASSERT_EQ(order(field_inv(x)), order(x));
    }
  }
}

TEST(OrderTest, TraceRepeatsWithPeriodOrder) {
  for (std::uint64_t p : primes_up_to(61)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const FieldElement x = fe(a, p);
      const std::uint64_t ord = order(x);
      for (std::uint64_t t = 0; t <= 3; ++t) {
        for (std::uint64_t r = 0; r < ord; ++r) ASSERT_EQ(field_pow(x, ord * t + r), field_pow(x, r));
      }
    }
  }
}

}  // namespace
}  // namespace proot
