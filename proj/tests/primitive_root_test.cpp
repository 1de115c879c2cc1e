#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "proot/order.hpp"
#include "proot/primitive_root.hpp"

namespace proot {
namespace {

std::vector<std::uint64_t> residues(const std::vector<FieldElement>& xs) {
  std::vector<std::uint64_t> out;
  for (const auto& x : xs) out.push_back(x.residue());
  return out;
}

TEST(PrimitiveRootTest, AuxExamples) {
  EXPECT_EQ(primitive_root_aux(1, Prime(7)).residue(), 1u);
  EXPECT_EQ(primitive_root_aux(3, Prime(7)).residue(), 2u);
  EXPECT_EQ(primitive_root_aux(6, Prime(7)).residue(), 5u);
  EXPECT_THROW(primitive_root_aux(4, Prime(7)), std::invalid_argument);
  EXPECT_THROW(primitive_root_aux(0, Prime(7)), std::invalid_argument);
}

TEST(PrimitiveRootTest, Examples) {
  EXPECT_EQ(primitive_root(Prime(2)).residue(), 1u);
  EXPECT_EQ(primitive_root(Prime(3)).residue(), 2u);
  EXPECT_EQ(primitive_root(Prime(5)).residue(), 2u);
  EXPECT_EQ(primitive_root(Prime(7)).residue(), 5u);
  EXPECT_EQ(primitive_root(Prime(13)).residue(), 2u);
  EXPECT_THROW(primitive_root(Prime(9)), NotPrimeError);
}

TEST(PrimitiveRootTest, LargerPrimes) {
  // The witness scan walks about p / q^n candidates per factor, so keep p
  // where every q^n is either large or the scan is short.
  for (std::uint64_t p : {65537u, 1000003u, 999983u}) {
    const FieldElement g = primitive_root(Prime(p));
    EXPECT_EQ(order_fast(g), p - 1) << p;
    EXPECT_EQ(order(g), p - 1) << p;
  }
}

TEST(PrimitiveRootTest, AuxHasOrderKForEveryDivisor) {
  for (std::uint64_t p : primes_up_to(500)) {
    for (std::uint64_t k = 1; k <= p - 1; ++k) {
      if ((p - 1) % k == 0) ASSERT_EQ(oracle::order(primitive_root_aux(k, Prime(p)).residue(), p), k) << k << " mod " << p;
    }
  }
}

TEST(PrimitiveRootTest, RecursionSideConditions) {
  for (std::uint64_t p : primes_up_to(500)) {
    std::vector<std::uint64_t> ks;
    primitive_root_aux(p - 1, Prime(p), [&](const AuxStep& s) {
      const std::uint64_t qn = s.factor.value();
      ks.push_back(s.k);
      EXPECT_EQ(s.cofactor * qn, s.k);
      EXPECT_LT(s.cofactor, s.k);
      EXPECT_EQ((p - 1) % s.cofactor, 0u);
      EXPECT_EQ(oracle::gcd(qn, s.cofactor), 1u);
      EXPECT_TRUE(oracle::is_prime(s.factor.q.value()));
      EXPECT_FALSE(s.witness.is_zero());
      EXPECT_FALSE(s.rest.is_zero());
      EXPECT_EQ(s.result, field_mul(s.witness, s.rest));
    });
    // Innermost level first, so k grows along the trail and ends at p - 1.
    if (p > 2) {
      ASSERT_FALSE(ks.empty());
      EXPECT_EQ(ks.back(), p - 1);
      EXPECT_TRUE(std::is_sorted(ks.begin(), ks.end()));
    } else {
      EXPECT_TRUE(ks.empty());
    }
  }
}

TEST(PrimitiveRootTest, IsPrimitiveRootExamples) {
  EXPECT_TRUE(is_primitive_root(2, Prime(5)));
  EXPECT_FALSE(is_primitive_root(2, Prime(7)));
  EXPECT_TRUE(is_primitive_root(3, Prime(7)));
  EXPECT_FALSE(is_primitive_root(0, Prime(7)));
  EXPECT_TRUE(is_primitive_root(1, Prime(2)));
}

TEST(PrimitiveRootTest, OracleAgreesWithOrder) {
  for (std::uint64_t p : primes_up_to(211)) {
    for (std::uint64_t g = 1; g < p; ++g) {
      ASSERT_EQ(is_primitive_root(g, Prime(p)), order(FieldElement(g, Prime(p))) == p - 1) << g << " mod " << p;
    }
  }
}

TEST(PrimitiveRootTest, CountAndTotient) {
  EXPECT_EQ(count_primitive_roots(Prime(2)), 1u);
  EXPECT_EQ(count_primitive_roots(Prime(5)), 2u);
  EXPECT_EQ(count_primitive_roots(Prime(7)), 2u);
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(6), 2u);
  EXPECT_EQ(totient(4), 2u);
  EXPECT_THROW(totient(0), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 300; ++n) ASSERT_EQ(totient(n), oracle::totient(n));
  for (std::uint64_t p : primes_up_to(211)) ASSERT_EQ(count_primitive_roots(Prime(p)), oracle::generators(p).size());
}

TEST(PrimitiveRootTest, DecomposeExamples) {
  const auto r7 = decompose_with_witnesses(Prime(7));
  EXPECT_EQ(r7.factors, (std::vector<PrimePowerFactor>{{Prime(2), 1}, {Prime(3), 1}}));
  EXPECT_EQ(residues(r7.witnesses), (std::vector<std::uint64_t>{6, 2}));
  EXPECT_EQ(r7.root.residue(), 5u);

  const auto r2 = decompose_with_witnesses(Prime(2));
  EXPECT_TRUE(r2.factors.empty());
  EXPECT_TRUE(r2.witnesses.empty());
  EXPECT_EQ(r2.root.residue(), 1u);

  const auto r13 = decompose_with_witnesses(Prime(13));
  EXPECT_EQ(r13.factors, (std::vector<PrimePowerFactor>{{Prime(2), 2}, {Prime(3), 1}}));
  EXPECT_EQ(residues(r13.witnesses), (std::vector<std::uint64_t>{5, 3}));
  EXPECT_EQ(r13.root.residue(), 2u);

  EXPECT_EQ(decompose_with_witnesses(Prime(3)).factors.size(), 1u);
}

TEST(PrimitiveRootTest, DecomposeMatchesPrimitiveRoot) {
  for (std::uint64_t p : primes_up_to(1000)) {
    const auto r = decompose_with_witnesses(Prime(p));
    std::uint64_t product = 1;
    FieldElement root = FieldElement::one(Prime(p));
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      product *= r.factors[i].value();
      root = field_mul(root, r.witnesses[i]);
      ASSERT_EQ(oracle::order(r.witnesses[i].residue(), p), r.factors[i].value());
    }
    ASSERT_EQ(product, p - 1);
    ASSERT_EQ(root, r.root);
    ASSERT_EQ(r.root, primitive_root(Prime(p)));
  }
}

TEST(PrimitiveRootTest, Deterministic) {
  for (std::uint64_t p : primes_up_to(300)) ASSERT_EQ(primitive_root(Prime(p)), primitive_root(Prime(p)));
}

}  // namespace
}  // namespace proot
