#include <gtest/gtest.h>

#include "relfrac/error.hpp"
#include "relfrac/rational.hpp"

using relfrac::Rational;

TEST(Rational, LowestTerms) {
  Rational r(6, 8);
  EXPECT_EQ(r.str(), "3/4");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(-3, 6).str(), "-1/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("9/11"), Rational(9, 11));
  EXPECT_EQ(Rational::parse("-4"), Rational(-4));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational::parse("1/0"), relfrac::Error);
  EXPECT_THROW(Rational::parse("x"), relfrac::Error);
  EXPECT_THROW(Rational::parse(""), relfrac::Error);
}

TEST(Rational, Arithmetic) {
  Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_EQ(Rational(7, 4).floor(), 1);
  EXPECT_EQ(Rational(7, 4).ceil(), 2);
  EXPECT_EQ(Rational(-7, 4).floor(), -2);
  EXPECT_EQ(Rational(4, 13).reciprocal(), Rational(13, 4));
}

TEST(Rational, BigValuesStayExact) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x = x * Rational(3, 2);
  for (int i = 0; i < 200; ++i) x = x / Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}

TEST(Rational, LcmOfDenominators) {
  std::vector<Rational> v{Rational(1, 2), Rational(1, 3), Rational(5, 4), Rational(2)};
  EXPECT_EQ(relfrac::lcm_of_denominators(v), 12);
}

TEST(Rational, Decimal) {
  EXPECT_EQ(Rational(9, 11).decimal(4), "0.8182");
  EXPECT_EQ(Rational(1, 2).decimal(2), "0.50");
}
