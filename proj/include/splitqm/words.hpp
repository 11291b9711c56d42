#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "splitqm/groups.hpp"

namespace splitqm {

enum class Side : std::uint8_t { A, B };

inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
inline const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

struct Letter {
  Side side;
  FactorElement element;

  friend bool operator==(const Letter& x, const Letter& y) { return x.side == y.side && x.element == y.element; }
};

/// Gamma = A * B with both factors non-trivial.
class Splitting {
 public:
  Splitting(FactorDescriptor a, FactorDescriptor b);

  const FactorDescriptor& factor(Side s) const { return s == Side::A ? a_ : b_; }
  const FactorDescriptor& a() const { return a_; }
  const FactorDescriptor& b() const { return b_; }
  std::string name() const { return a_.name() + "*" + b_.name(); }

  friend bool operator==(const Splitting& x, const Splitting& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  FactorDescriptor a_;
  FactorDescriptor b_;
};

/// Z * Z, the free group on a and b.
Splitting free_group_splitting();

/// An element of A * B in normal form: nonempty alternating letters, none of
/// them a factor identity. The empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Caller guarantees the normal form invariants. Use reduce() otherwise.
  static Word from_normal_form(std::vector<Letter> letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
  }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// The factor containing this element when it is a single letter.
  std::optional<Side> single_factor() const {
    if (letters_.size() == 1) return letters_.front().side;
    return std::nullopt;
  }

  friend bool operator==(const Word& x, const Word& y) { return x.letters_ == y.letters_; }
  friend bool operator!=(const Word& x, const Word& y) { return !(x == y); }
  /// Arbitrary but fixed total order, so words can key ordered maps.
  friend bool operator<(const Word& x, const Word& y);

 private:
  std::vector<Letter> letters_;
};

/// Checks every normal-form invariant of g against s.
bool is_normal_form(const Splitting& s, const Word& g);

/// Merges adjacent same-side letters and drops identities until the
/// sequence alternates. The result is the unique normal form.
Word reduce(const Splitting& s, std::span<const Letter> raw);

/// The one-letter word x, or the empty word when x is the identity.
Word letter_word(const Splitting& s, Side side, const FactorElement& x);

Word multiply(const Splitting& s, const Word& g, const Word& h);
Word invert(const Splitting& s, const Word& g);
Word power(const Splitting& s, const Word& g, const BigInt& n);
Word conjugate(const Splitting& s, const Word& w, const Word& g);  // w g w^-1

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// g = conjugator * core * conjugator^-1, where core starts and ends in
/// different factors, or is a single letter, or is empty.
CyclicReduction cyclically_reduce(const Splitting& s, const Word& g);

/// Whitespace separated tokens `a`, `b`, `a^k`, `b^k` (generators of Z or
/// Z/n factors) and `A[i]`, `B[j]`, `A[i]^k` (element i of the factor).
/// Throws ParseError with a 1-based column.
Word parse_word(const Splitting& s, std::string_view text);
std::string format_word(const Splitting& s, const Word& g);

/// Deterministic random words. Lengths are uniform in [0, length_bound];
/// integer exponents are uniform in [-exponent_bound, exponent_bound] \ {0};
/// finite-factor letters are uniform over non-identity elements.
class WordSampler {
 public:
  WordSampler(Splitting s, std::size_t length_bound, std::int64_t exponent_bound, std::uint64_t seed);

  Word next();
  Word next_with_length(std::size_t length, Side first);
  FactorElement next_nontrivial(Side side);
  std::mt19937_64& engine() { return engine_; }
  const Splitting& splitting() const { return splitting_; }

 private:
  Splitting splitting_;
  std::size_t length_bound_;
  std::int64_t exponent_bound_;
  std::mt19937_64 engine_;
};

Word random_word(const Splitting& s, std::size_t length_bound, std::int64_t exponent_bound, std::uint64_t seed);

/// g = u x and h = y v with u, v random and x, y letters from `side`, so
/// the junction of g and h merges exactly x and y.
std::pair<Word, Word> junction_pair(WordSampler& sampler, Side side, const FactorElement& x, const FactorElement& y);

/// Every normal-form word of letter-length <= max_length whose integer
/// exponents lie in [-exponent_bound, exponent_bound] (finite factors use
/// all non-identity elements). Exponent bounds may differ per side.
std::vector<Word> all_words(const Splitting& s, std::size_t max_length, std::int64_t exponent_bound_a,
                            std::int64_t exponent_bound_b);

inline std::vector<Word> all_words(const Splitting& s, std::size_t max_length, std::int64_t exponent_bound) {
  return all_words(s, max_length, exponent_bound, exponent_bound);
}

}  // namespace splitqm
