#include <gtest/gtest.h>

#include <random>

#include "splitqm/groups.hpp"

namespace splitqm {
namespace {

std::vector<FactorDescriptor> finite_descriptors() {
  return {FactorDescriptor::cyclic(2), FactorDescriptor::cyclic(3), FactorDescriptor::cyclic(6),
          FactorDescriptor::cyclic(12), symmetric_group_s3()};
}

TEST(Groups, SpecExamples) {
  const auto z = FactorDescriptor::integer();
  const auto z3 = FactorDescriptor::cyclic(3);
  EXPECT_EQ(multiply(z, element(3), element(-3)), element(0));
  EXPECT_EQ(multiply(z3, element(2), element(2)), element(1));
  EXPECT_EQ(invert(z, element(5)), element(-5));
  EXPECT_EQ(identity(FactorDescriptor::cyclic(4)), element(0));
  EXPECT_EQ(element_order(z, element(0)), 1u);
  EXPECT_EQ(element_order(z, element(7)), std::nullopt);
  EXPECT_EQ(element_order(FactorDescriptor::cyclic(6), element(4)), 3u);
  EXPECT_EQ(enumerate(FactorDescriptor::cyclic(2)), (std::vector<FactorElement>{element(0), element(1)}));
  EXPECT_EQ(enumerate(z3).size(), 3u);
  EXPECT_EQ(enumerate(symmetric_group_s3()).size(), 6u);
}

TEST(Groups, TranspositionsAreInvolutionsInS3) {
  const auto s3 = symmetric_group_s3();
  for (int t = 1; t <= 3; ++t) EXPECT_TRUE(is_identity(s3, multiply(s3, element(t), element(t))));
  EXPECT_FALSE(is_identity(s3, multiply(s3, element(4), element(4))));
  // Two distinct transpositions compose to a 3-cycle; S3 is not abelian.
  EXPECT_NE(multiply(s3, element(1), element(2)), multiply(s3, element(2), element(1)));
}

TEST(Groups, AxiomsHoldExhaustivelyOnFiniteFactors) {
  for (const auto& d : finite_descriptors()) {
    const auto all = enumerate(d);
    for (const auto& x : all) {
      EXPECT_EQ(multiply(d, identity(d), x), x);
      EXPECT_EQ(multiply(d, x, identity(d)), x);
      EXPECT_TRUE(is_identity(d, multiply(d, x, invert(d, x))));
      EXPECT_EQ(invert(d, invert(d, x)), x);
      for (const auto& y : all)
        for (const auto& z : all)
          ASSERT_EQ(multiply(d, multiply(d, x, y), z), multiply(d, x, multiply(d, y, z))) << d.name();
    }
  }
}

TEST(Groups, AxiomsHoldOnSampledIntegers) {
  const auto z = FactorDescriptor::integer();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000, 1'000'000);
  for (int i = 0; i < 1000; ++i) {
    const auto x = element(dist(rng)), y = element(dist(rng)), w = element(dist(rng));
    EXPECT_EQ(multiply(z, multiply(z, x, y), w), multiply(z, x, multiply(z, y, w)));
    EXPECT_EQ(invert(z, invert(z, x)), x);
  }
}

TEST(Groups, OrderMatchesBruteForceAndDividesGroupSize) {
  for (const auto& d : finite_descriptors()) {
    for (const auto& x : enumerate(d)) {
      std::uint64_t n = 1;
      FactorElement p = x;
      while (!is_identity(d, p)) {
        p = multiply(d, p, x);
        ++n;
      }
      EXPECT_EQ(element_order(d, x), n);
      EXPECT_EQ(d.size() % n, 0u);
    }
  }
}

TEST(Groups, PowerAgreesWithRepeatedMultiplication) {
  for (const auto& d : finite_descriptors()) {
    for (const auto& x : enumerate(d)) {
      FactorElement expected = identity(d);
      for (int n = 0; n <= 13; ++n) {
        EXPECT_EQ(power(d, x, n), expected);
        EXPECT_EQ(power(d, x, -n), invert(d, expected));
        expected = multiply(d, expected, x);
      }
    }
  }
  EXPECT_EQ(power(FactorDescriptor::integer(), element(3), BigInt(1) << 80).value, BigInt(3) << 80);
}

TEST(Groups, RejectsInvalidDescriptorsAndElements) {
  EXPECT_THROW(FactorDescriptor::cyclic(1), std::invalid_argument);
  EXPECT_THROW(FactorDescriptor::finite_table({{0, 1}, {1, 1}}, {0, 1}, 0), std::invalid_argument);
  EXPECT_THROW(FactorDescriptor::finite_table({{0, 1}, {1, 0}}, {0, 0}, 0), std::invalid_argument);
  // Smallest non-associative loop: a Latin square with identity 0 that is
  // not a group table.
  const FactorDescriptor::Table loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(FactorDescriptor::finite_table(loop, {0, 1, 2, 3, 4}, 0), std::invalid_argument);

  const auto z3 = FactorDescriptor::cyclic(3);
  EXPECT_FALSE(is_valid(z3, element(3)));
  EXPECT_FALSE(is_valid(z3, element(-1)));
  EXPECT_THROW(multiply(z3, element(5), element(1)), std::invalid_argument);
  EXPECT_THROW(enumerate(FactorDescriptor::integer()), std::invalid_argument);
  EXPECT_THROW(generator(symmetric_group_s3()), std::invalid_argument);
}

TEST(Groups, DescriptorNames) {
  EXPECT_EQ(FactorDescriptor::integer().name(), "Z");
  EXPECT_EQ(FactorDescriptor::cyclic(5).name(), "Z/5");
  EXPECT_EQ(symmetric_group_s3().name(), "S3");
  EXPECT_EQ(FactorDescriptor::cyclic(5), FactorDescriptor::cyclic(5));
  EXPECT_FALSE(FactorDescriptor::cyclic(5) == FactorDescriptor::cyclic(6));
}

}  // namespace
}  // namespace splitqm
