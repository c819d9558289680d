#include <gtest/gtest.h>

#include <random>

#include "g2flat/field.hpp"

using namespace g2flat;

TEST(Field, ParseAndPrint) {
  EXPECT_EQ(CoefficientField::parse("QQ").to_string(), "QQ");
  EXPECT_EQ(CoefficientField::parse("Fp:32003").to_string(), "Fp:32003");
  EXPECT_THROW(CoefficientField::parse("Fp:32004"), std::invalid_argument);
  EXPECT_THROW(CoefficientField::parse("ZZ"), std::invalid_argument);
  EXPECT_THROW(CoefficientField::prime(2), std::invalid_argument);
}

TEST(Field, NormalizeModP) {
  const auto f = CoefficientField::prime(7);
  EXPECT_EQ(f.normalize(mpq_class(-1)), 6);
  EXPECT_EQ(f.normalize(mpq_class(1, 3)), 5);  // 3 * 5 = 15 = 1 mod 7
  EXPECT_THROW(f.normalize(mpq_class(1, 7)), std::domain_error);
  EXPECT_EQ(f.inverse(mpq_class(3)), 5);
}

TEST(Field, PrimeOpsInverseProperty) {
  PrimeFieldOps ops{32003};
  for (std::uint32_t a = 1; a < 32003; a += 97) EXPECT_EQ(ops.mul(a, ops.inv(a)), 1u);
  EXPECT_EQ(ops.from_mpq(mpq_class(-2, 3)), ops.mul(ops.neg(2), ops.inv(3)));
}

TEST(Field, SqrtModMatchesSquaring) {
  const std::uint32_t p = 32003;
  std::mt19937 rng(5);
  for (int k = 0; k < 200; ++k) {
    const std::uint32_t x = rng() % p;
    const std::uint32_t a = static_cast<std::uint32_t>((std::uint64_t(x) * x) % p);
    ASSERT_TRUE(is_square_mod(a, p));
    const std::uint32_t r = sqrt_mod(a, p);
    EXPECT_EQ((std::uint64_t(r) * r) % p, a);
  }
}

TEST(Field, QuadraticExtensionArithmetic) {
  const auto ext = QuadraticExtensionOps::for_prime(32003);
  EXPECT_FALSE(is_square_mod(ext.nonresidue, 32003));
  const auto r = ext.sqrt(ext.nonresidue);
  EXPECT_EQ(ext.mul(r, r), ext.from_base(ext.nonresidue));
  const QuadraticExtensionOps::Elem a{12, 345};
  EXPECT_EQ(ext.mul(a, ext.inv(a)), ext.one());
}
