#include <gtest/gtest.h>

#include "splitqm/numeric.hpp"

namespace splitqm {
namespace {

TEST(Numeric, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(parse_integer("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Numeric, RejectsMalformedRationals) {
  for (const char* bad : {"", "/", "1/", "/2", "1/0", "1/-2", "x", "1.5", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(Numeric, FormatsLowestTerms) {
  EXPECT_EQ(to_string(Rational(4, 6)), "2/3");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Numeric, FloorModulo) {
  EXPECT_EQ(mod_floor(BigInt(-1), 3), 2);
  EXPECT_EQ(mod_floor(BigInt(7), 3), 1);
  EXPECT_EQ(mod_floor(BigInt(-9), 3), 0);
}

TEST(Numeric, NarrowingThrowsWhenTooLarge) {
  EXPECT_EQ(to_int64(BigInt(-5)), -5);
  EXPECT_THROW(to_int64(BigInt(1) << 70), std::out_of_range);
}

}  // namespace
}  // namespace splitqm
