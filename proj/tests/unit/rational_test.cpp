#include <gtest/gtest.h>

#include <random>

#include "hadex/error.hpp"
#include "hadex/rational.hpp"

namespace hadex {
namespace {

TEST(Rational, StoredInLowestTermsWithPositiveDenominator) {
  const Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational::parse("a/b"), ParseError);
  EXPECT_THROW(Rational::parse("/3"), ParseError);
}

TEST(Rational, DivisionByZeroIsAnError) {
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, TotalOrder) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 6), Rational(1, 3));
}

// Arithmetic checked against cross-multiplication on 128-bit integers: for
// a/b op c/d the result p/q must satisfy p * den == num * q where num/den is
// the textbook formula before any reduction.
TEST(Rational, ArithmeticMatchesCrossMultiplicationOracle) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  auto matches = [](const Rational& got, __int128 n, __int128 d) {
    const __int128 p = got.numerator().get_si();
    const __int128 q = got.denominator().get_si();
    return q > 0 && p * d == n * q;
  };
  for (int trial = 0; trial < 2000; ++trial) {
    const __int128 a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
    const Rational y(static_cast<std::int64_t>(c), static_cast<std::int64_t>(d));
    ASSERT_TRUE(matches(x + y, a * d + b * c, b * d));
    ASSERT_TRUE(matches(x - y, a * d - b * c, b * d));
    ASSERT_TRUE(matches(x * y, a * c, b * d));
    if (c != 0) {
      const __int128 qn = a * d * (c < 0 ? -1 : 1);
      const __int128 qd = b * (c < 0 ? -c : c);
      ASSERT_TRUE(matches(x / y, qn, qd));
    }
    ASSERT_EQ(x == y, a * d == c * b);
    ASSERT_EQ(x < y, a * d < c * b);
  }
}

}  // namespace
}  // namespace hadex
