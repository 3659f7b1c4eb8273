#include <gtest/gtest.h>

#include <random>

#include "truncmul/error.hpp"
#include "truncmul/rational.hpp"

using namespace truncmul;

TEST(RoundHalfToZero, HalvesGoTowardZero) {
  EXPECT_EQ(round_half_to_zero(Rational(1, 2)), 0);
  EXPECT_EQ(round_half_to_zero(Rational(-1, 2)), 0);
  EXPECT_EQ(round_half_to_zero(Rational(3, 2)), 1);
  EXPECT_EQ(round_half_to_zero(Rational(-3, 2)), -1);
  EXPECT_EQ(round_half_to_zero(Rational(0)), 0);
}

TEST(RoundHalfToZero, ExampleCoefficients) {
  EXPECT_EQ(round_half_to_zero(Rational(13790, 1000)), 14);
  EXPECT_EQ(round_half_to_zero(Rational(-10208, 1000)), -10);
}

TEST(RoundHalfToZero, UnnormalizedSignsAgree) {
  EXPECT_EQ(round_half_to_zero(Int(7), Int(-2)), -3);
  EXPECT_EQ(round_half_to_zero(Int(-7), Int(-2)), 3);
  EXPECT_EQ(round_half_to_zero(Int(-5), Int(-2)), 2);
  EXPECT_THROW(round_half_to_zero(Int(1), Int(0)), Error);
}

TEST(RoundHalfToZero, WithinHalfOfValue) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 999);
  for (int i = 0; i < 5000; ++i) {
    const Rational r(num(rng), den(rng));
    const Int k = round_half_to_zero(r);
    const Rational err = r - Rational(k);
    const Rational half(1, 2);
    ASSERT_LE(err, half);
    ASSERT_GE(err, -half);
    // On an exact half the result is the one closer to zero.
    if (err == half || err == -half) {
      ASSERT_LT(Rational(abs(k)), Rational(abs(r.num()), r.den()));
    }
  }
}

TEST(Rational, NormalizesSignAndTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.floor(), -2);
  EXPECT_EQ(r.ceil(), -1);
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, TruncatedDecimals) {
  EXPECT_EQ(Rational(1807537, 131072).to_decimal_truncated(3), "13.790");
  EXPECT_EQ(Rational(-334505, 32768).to_decimal_truncated(3), "-10.208");
  EXPECT_EQ(Rational(-1, 4).to_decimal_truncated(0), "-0");
  EXPECT_EQ(Rational(-1, 2000).to_decimal_truncated(3), "-0.000");
  EXPECT_EQ(Rational(5).to_decimal_truncated(2), "5.00");
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}
