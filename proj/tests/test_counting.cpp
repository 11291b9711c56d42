#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "splitqm/counting.hpp"
#include "splitqm/errors.hpp"

namespace splitqm {
namespace {

const Splitting kFree = free_group_splitting();

ReducedLetterWord r(const std::string& text) { return ReducedLetterWord::parse(text); }

SplitQM random_finite_support(std::mt19937_64& rng) {
  RandomQMOptions options;
  options.support_radius = 5;
  options.allow_slope = options.allow_periodic = options.allow_sign = false;
  return SplitQM(kFree, random_factor_qm(kFree.a(), rng, options), random_factor_qm(kFree.b(), rng, options));
}

TEST(Counting, SubwordExamples) {
  EXPECT_EQ(subword_count(r("aba"), r("ababa")), 2);
  EXPECT_EQ(subword_count(r("aba"), r("")), 0);
  EXPECT_EQ(subword_count(r(""), r("ab")), 0);
  EXPECT_EQ(subword_count(r("a"), r("aaa")), 3);
  EXPECT_EQ(counting_qm(r("aba"), r("ababa")), 2);
  EXPECT_EQ(counting_qm(r("ab"), r("BA")), -1);
}

TEST(Counting, BlockExamples) {
  EXPECT_EQ(block_counting(Side::A, 2, r("baab")), 1);
  EXPECT_EQ(block_counting(Side::A, 3, r("")), 0);
  EXPECT_EQ(block_counting(Side::B, 1, r("abA")), 1);
  // a^2 inside a^3 is not framed by b letters.
  EXPECT_EQ(block_counting(Side::A, 2, r("baaab")), 0);
  EXPECT_EQ(block_counting(Side::A, 2, r("BAAb")), -1);
  EXPECT_THROW(block_counting(Side::A, 0, r("ab")), std::invalid_argument);
}

TEST(Counting, MatchesOffsetScanOracleExhaustively) {
  std::vector<std::string> words;
  for (std::size_t n = 0; n <= 6; ++n)
    for (auto& s : oracle::reduced_strings(n)) words.push_back(std::move(s));
  std::vector<ReducedLetterWord> parsed;
  for (const auto& s : words) parsed.push_back(r(s));
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      ASSERT_EQ(subword_count(parsed[i], parsed[j]), oracle::count_offsets(words[i], words[j]))
          << words[i] << " in " << words[j];
}

TEST(Counting, CountingPropertiesOnSamples) {
  WordSampler sampler(kFree, 8, 3, 41);
  for (int i = 0; i < 500; ++i) {
    const auto g = ReducedLetterWord::from_word(kFree, sampler.next());
    auto w = ReducedLetterWord::from_word(kFree, sampler.next());
    if (w.size() > 4) w = ReducedLetterWord::from_letters({w.letters().begin(), w.letters().begin() + 4});
    EXPECT_EQ(counting_qm(w, g.inverse()), -counting_qm(w, g));
    if (!w.empty()) {
      EXPECT_EQ(counting_qm(w, w), 1);
      if (w.size() <= g.size()) {
        EXPECT_LE(subword_count(w, g), static_cast<std::int64_t>(g.size() - w.size() + 1));
      }
    }
  }
}

TEST(Counting, WordConversions) {
  const Word g = parse_word(kFree, "a^3 b^-2 a^-1");
  const auto letters = ReducedLetterWord::from_word(kFree, g);
  EXPECT_EQ(letters.str(), "aaaBBA");
  EXPECT_EQ(letters.to_word(kFree), g);
  EXPECT_EQ(letters.inverse().str(), "abbAAA");
  EXPECT_THROW(r("aA"), std::invalid_argument);
  EXPECT_THROW(r("abc"), std::invalid_argument);
  EXPECT_THROW(ReducedLetterWord::from_letters({1, 3}), std::invalid_argument);
  const Splitting z3(FactorDescriptor::cyclic(3), FactorDescriptor::integer());
  EXPECT_THROW(ReducedLetterWord::from_word(z3, parse_word(z3, "a b")), std::invalid_argument);
}

TEST(Counting, DecompositionResidualVanishes) {
  std::mt19937_64 rng(42);
  for (int c = 0; c < 5; ++c) {
    const SplitQM f = random_finite_support(rng);
    WordSampler sampler(kFree, 9, 7, 43 + c);
    for (int i = 0; i < 300; ++i) EXPECT_EQ(decomposition_residual(f, sampler.next()), 0);
  }
}

TEST(Counting, DecompositionBoundaryCases) {
  const SplitQM f = sequence_qm({{1, 1}, {2, Rational(-1, 2)}, {3, 2}});
  for (const char* text : {"", "a^2", "b^-3", "a b", "b a", "a b a", "b a b", "a^2 b^-1 a^3 b", "b^2 a b^-1 a^-3",
                           "a b^2 a^-1 b^3 a"}) {
    const Word g = parse_word(kFree, text);
    EXPECT_EQ(decomposition_residual(f, g), 0) << text;
  }
  // Interior syllables are exactly what the counting maps see.
  const Word g = parse_word(kFree, "b a^2 b^3 a");
  EXPECT_EQ(counting_combination(f, g), eval_factor(f.factor(Side::A), element(2)) +
                                            eval_factor(f.factor(Side::B), element(3)));
}

// Subtracting only a leading A-syllable and a trailing B-syllable misses
// the boundary of words such as b a b.
TEST(Counting, BoundaryTermsAreNeededOnBothSides) {
  const SplitQM f = sequence_qm({{1, 1}});
  const Word g = parse_word(kFree, "b a b");
  Rational one_sided = eval_split(f, g);
  if (g.front().side == Side::A) one_sided -= eval_factor(f.factor(Side::A), g.front().element);
  if (g.back().side == Side::B) one_sided -= eval_factor(f.factor(Side::B), g.back().element);
  EXPECT_NE(counting_combination(f, g), one_sided);
  EXPECT_EQ(counting_combination(f, g), eval_split(f, g) - boundary_terms(f, g));
}

// The two boundary syllables bound the gap: one from each factor when g
// starts and ends in different factors, two from the same one otherwise.
TEST(Counting, CombinationStaysWithinSupNormBound) {
  std::mt19937_64 rng(44);
  for (int c = 0; c < 5; ++c) {
    const SplitQM f = random_finite_support(rng);
    std::map<Side, Rational> sup;
    for (Side side : {Side::A, Side::B}) {
      for (const auto& [k, v] : f.factor(side).support) sup[side] = std::max(sup[side], v < 0 ? Rational(-v) : v);
    }
    WordSampler sampler(kFree, 9, 7, 45 + c);
    for (int i = 0; i < 200; ++i) {
      const Word g = sampler.next();
      if (g.empty()) continue;
      Rational gap = counting_combination(f, g) - eval_split(f, g);
      if (gap < 0) gap = -gap;
      const Rational bound = g.size() == 1 ? sup[g.front().side] : sup[g.front().side] + sup[g.back().side];
      EXPECT_LE(gap, bound);
      if (g.front().side != g.back().side) {
        EXPECT_LE(gap, sup[Side::A] + sup[Side::B]);
      }
    }
  }
}

TEST(Counting, DecompositionRejectsUnboundedParts) {
  const SplitQM f = sign_qm();
  EXPECT_THROW(counting_combination(f, parse_word(kFree, "a b")), std::invalid_argument);
}

}  // namespace
}  // namespace splitqm
