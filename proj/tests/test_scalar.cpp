#include "spinforge/scalar.hpp"

#include <gtest/gtest.h>

using namespace spinforge;

TEST(Scalar, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational(" +0.125 "), Rational(1, 8));
  EXPECT_EQ(parse_rational("-.5"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(parse_rational("007/08"), Rational(7, 8));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(boost::multiprecision::mpz_int("123456789012345678901234567890")));
}

TEST(Scalar, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/0", "a", "1//2", "1.2.3", "--1", "1e5", "."}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_double("nan"), ParseError);
  EXPECT_THROW(parse_double("1.5x"), ParseError);
}

TEST(Scalar, ParsesDoublesIncludingFractions) {
  EXPECT_DOUBLE_EQ(parse_double("1/4"), 0.25);
  EXPECT_DOUBLE_EQ(parse_double("-2.5e-1"), -0.25);
}

TEST(Scalar, ListRoundTrip) {
  auto v = parse_list<Rational>("1,-2/3,0.5");
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(join_scalars(v), "1,-2/3,1/2");
  EXPECT_THROW(parse_list<Rational>("1,,2"), ParseError);
}

TEST(Scalar, DoubleFormattingIsShortestRoundTrip) {
  EXPECT_EQ(to_string(0.1), "0.1");
  EXPECT_EQ(to_string(-1.0), "-1");
}

TEST(Scalar, RandomStreamsAreSeeded) {
  Rng a(7), b(7);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(random_rational(a), random_rational(b));
  Rng c(9);
  for (int i = 0; i < 1000; ++i) {
    auto r = random_rational(c, 3);
    EXPECT_LE(abs_value(r), Rational(3));
  }
}
