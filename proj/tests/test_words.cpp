#include <gtest/gtest.h>

#include "oracles.hpp"
#include "splitqm/errors.hpp"
#include "splitqm/words.hpp"

namespace splitqm {
namespace {

const Splitting kFree = free_group_splitting();

Word w(const std::string& text) { return parse_word(kFree, text); }

Letter la(std::int64_t k) { return {Side::A, element(k)}; }
Letter lb(std::int64_t k) { return {Side::B, element(k)}; }

TEST(Words, ReduceExamples) {
  EXPECT_TRUE(reduce(kFree, std::vector<Letter>{la(2), la(-2)}).empty());
  EXPECT_EQ(reduce(kFree, std::vector<Letter>{la(1), lb(1), lb(-1), la(1)}), w("a^2"));
  EXPECT_EQ(reduce(kFree, std::vector<Letter>{la(1), lb(1), la(1), la(-1), lb(1), la(1)}), w("a b^2 a"));
}

TEST(Words, MultiplyExamples) {
  WordSampler sampler(kFree, 6, 3, 11);
  for (int i = 0; i < 200; ++i) {
    const Word g = sampler.next();
    EXPECT_TRUE(multiply(kFree, g, invert(kFree, g)).empty());
  }
  EXPECT_EQ(power(kFree, w("a b"), 3), w("a b a b a b"));
  EXPECT_EQ(power(kFree, w("a b"), 3).size(), 6u);
  // Junction with a cancelling letter pair: g' a * a^-1 h' = g' h'.
  const Word gp = w("b a^2 b"), hp = w("b^-3 a");
  EXPECT_EQ(multiply(kFree, multiply(kFree, gp, w("a")), multiply(kFree, w("a^-1"), hp)), multiply(kFree, gp, hp));
}

TEST(Words, MultiplyMatchesFreeReductionOracle) {
  WordSampler sampler(kFree, 7, 3, 12);
  for (int i = 0; i < 2000; ++i) {
    const Word g = sampler.next(), h = sampler.next();
    EXPECT_EQ(oracle::expand(multiply(kFree, g, h)), oracle::free_reduce(oracle::expand(g) + oracle::expand(h)));
    EXPECT_EQ(oracle::expand(invert(kFree, g)), oracle::inverse_string(oracle::expand(g)));
  }
}

TEST(Words, GroupLawsOnSamples) {
  for (const Splitting& s : {kFree, Splitting(FactorDescriptor::cyclic(5), FactorDescriptor::cyclic(6)),
                             Splitting(symmetric_group_s3(), FactorDescriptor::integer())}) {
    WordSampler sampler(s, 6, 3, 13);
    for (int i = 0; i < 500; ++i) {
      const Word g = sampler.next(), h = sampler.next(), k = sampler.next();
      ASSERT_TRUE(is_normal_form(s, g));
      EXPECT_EQ(multiply(s, multiply(s, g, h), k), multiply(s, g, multiply(s, h, k)));
      EXPECT_EQ(invert(s, multiply(s, g, h)), multiply(s, invert(s, h), invert(s, g)));
      EXPECT_EQ(reduce(s, g.letters()), g);
      EXPECT_TRUE(is_normal_form(s, multiply(s, g, h)));
    }
  }
}

TEST(Words, PowerMatchesRepeatedProduct) {
  const Splitting s(FactorDescriptor::cyclic(3), FactorDescriptor::integer());
  WordSampler sampler(s, 5, 2, 14);
  for (int i = 0; i < 100; ++i) {
    const Word g = sampler.next();
    Word expected;
    for (int n = 0; n <= 9; ++n) {
      EXPECT_EQ(power(s, g, n), expected);
      EXPECT_EQ(power(s, g, -n), invert(s, expected));
      expected = multiply(s, expected, g);
    }
  }
}

TEST(Words, CyclicReductionExamples) {
  auto cr = cyclically_reduce(kFree, w("a b a^-1"));
  EXPECT_EQ(cr.core, w("b"));
  EXPECT_EQ(cr.conjugator, w("a"));
  cr = cyclically_reduce(kFree, w("b a"));
  EXPECT_EQ(cr.core, w("b a"));
  EXPECT_TRUE(cr.conjugator.empty());
  cr = cyclically_reduce(kFree, w("a^2 b a^-1"));
  EXPECT_EQ(cr.core, w("a b"));
  EXPECT_EQ(cr.conjugator, w("a"));
  cr = cyclically_reduce(kFree, w("a^5"));
  EXPECT_EQ(cr.core, w("a^5"));
  EXPECT_TRUE(cr.conjugator.empty());
}

TEST(Words, CyclicReductionReassemblesExhaustively) {
  const auto words = all_words(kFree, 6, 3);
  for (const Word& g : words) {
    const auto [core, conj] = cyclically_reduce(kFree, g);
    ASSERT_EQ(conjugate(kFree, conj, core), g) << format_word(kFree, g);
    ASSERT_TRUE(core.size() <= 1 || core.front().side != core.back().side) << format_word(kFree, g);
  }
}

TEST(Words, CyclicReductionOnTableFactors) {
  const Splitting s(symmetric_group_s3(), FactorDescriptor::cyclic(4));
  for (const Word& g : all_words(s, 5, 1)) {
    const auto [core, conj] = cyclically_reduce(s, g);
    ASSERT_EQ(conjugate(s, conj, core), g);
    ASSERT_TRUE(core.size() <= 1 || core.front().side != core.back().side);
  }
}

TEST(Words, AllWordsCountsMatchCombinatorics) {
  // 6 letters per side with exponents in [-3, 3]: 1 + 2 * (6 + 36 + 216).
  EXPECT_EQ(all_words(kFree, 3, 3).size(), 1u + 2u * (6 + 36 + 216));
}

TEST(Words, ParseExamples) {
  EXPECT_EQ(w("a^3 b^-2 a").size(), 3u);
  EXPECT_TRUE(w("").empty());
  EXPECT_EQ(w("a a"), w("a^2"));
  EXPECT_EQ(format_word(kFree, w("a a b^-1  a^-4")), "a^2 b^-1 a^-4");
  const Splitting s(symmetric_group_s3(), FactorDescriptor::cyclic(3));
  const Word g = parse_word(s, "A[1] b^2 A[4]^2 b^4");
  EXPECT_EQ(format_word(s, g), "A[1] b^2 A[5] b");
  EXPECT_EQ(parse_word(s, format_word(s, g)), g);
}

TEST(Words, ParseRoundTripNormalizes) {
  const Splitting s(FactorDescriptor::cyclic(5), FactorDescriptor::integer());
  WordSampler sampler(s, 8, 4, 15);
  for (int i = 0; i < 300; ++i) {
    const Word g = sampler.next();
    EXPECT_EQ(parse_word(s, format_word(s, g)), g);
  }
}

TEST(Words, ParseErrorsCarryColumns) {
  auto column_of = [](const Splitting& s, const std::string& text) -> std::size_t {
    try {
      parse_word(s, text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(column_of(kFree, "a c"), 3u);
  EXPECT_EQ(column_of(kFree, "a^x"), 3u);
  EXPECT_EQ(column_of(kFree, "b^"), 2u);
  EXPECT_EQ(column_of(kFree, "  a^1/2"), 5u);
  const Splitting s(symmetric_group_s3(), FactorDescriptor::cyclic(3));
  EXPECT_EQ(column_of(s, "b a"), 3u);
  EXPECT_EQ(column_of(s, "A[9]"), 3u);
  EXPECT_EQ(column_of(s, "A[1"), 1u);
}

TEST(Words, SamplerIsDeterministicAndValid) {
  const Splitting s(FactorDescriptor::cyclic(5), FactorDescriptor::cyclic(6));
  EXPECT_EQ(random_word(s, 10, 3, 99), random_word(s, 10, 3, 99));
  WordSampler sampler(s, 10, 3, 100);
  for (int i = 0; i < 1000; ++i) ASSERT_TRUE(is_normal_form(s, sampler.next()));
  WordSampler short_words(kFree, 1, 3, 101);
  for (int i = 0; i < 200; ++i) EXPECT_LE(short_words.next().size(), 1u);
  EXPECT_THROW(WordSampler(kFree, 1, 0, 1), std::invalid_argument);
}

TEST(Words, SplittingRejectsTrivialFactors) {
  const auto trivial = FactorDescriptor::finite_table({{0}}, {0}, 0);
  EXPECT_THROW(Splitting(trivial, FactorDescriptor::integer()), std::invalid_argument);
}

}  // namespace
}  // namespace splitqm
