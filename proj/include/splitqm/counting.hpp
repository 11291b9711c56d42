#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "splitqm/quasimorphisms.hpp"
#include "splitqm/words.hpp"

namespace splitqm {

/// A freely reduced word over a, a^-1, b, b^-1, stored as +1, -1, +2, -2.
class ReducedLetterWord {
 public:
  ReducedLetterWord() = default;

  /// Throws std::invalid_argument on a letter outside {±1, ±2} or an
  /// adjacent inverse pair.
  static ReducedLetterWord from_letters(std::vector<std::int8_t> letters);
  /// "abAB" notation, upper case for inverses.
  static ReducedLetterWord parse(std::string_view text);
  /// Expands a^k into |k| letters. Needs the Z * Z splitting.
  static ReducedLetterWord from_word(const Splitting& s, const Word& g);

  Word to_word(const Splitting& s) const;
  std::string str() const;
  ReducedLetterWord inverse() const;

  const std::vector<std::int8_t>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const ReducedLetterWord&, const ReducedLetterWord&) = default;

 private:
  std::vector<std::int8_t> letters_;
};

/// Number of (possibly overlapping) occurrences of w as a subword of g.
std::int64_t subword_count(const ReducedLetterWord& w, const ReducedLetterWord& g);

/// count(w, g) - count(w^-1, g).
std::int64_t counting_qm(const ReducedLetterWord& w, const ReducedLetterWord& g);

/// Sum of the four counting maps for x^k framed by y^{±1} on both sides,
/// x the generator of `side` and y the other generator. k >= 1.
std::int64_t block_counting(Side side, std::int64_t k, const ReducedLetterWord& g);

/// Sum over k >= 1 of q_A(a^k) C_{a,k}(g) + q_B(b^k) C_{b,k}(g), evaluated
/// by subword counting. Needs finite-support factor maps on Z * Z.
Rational counting_combination(const SplitQM& f, const Word& g);

/// f of the first and the last syllable of g's normal form (a single
/// syllable is counted once, the empty word gives 0).
Rational boundary_terms(const SplitQM& f, const Word& g);

/// counting_combination(g) - (f(g) - boundary_terms(g)). Throws
/// IdentityViolation when it is not 0, so a returned value is always 0.
Rational decomposition_residual(const SplitQM& f, const Word& g);

}  // namespace splitqm
