#include "splitqm/counting.hpp"

#include <cstdlib>
#include <stdexcept>

#include "splitqm/errors.hpp"

namespace splitqm {

namespace {

constexpr std::int64_t kMaxExpansion = 10'000'000;

void require_free_group(const Splitting& s) {
  if (s.a().kind() != FactorKind::Integer || s.b().kind() != FactorKind::Integer) {
    throw std::invalid_argument("counting needs the splitting Z * Z, got " + s.name());
  }
}

std::int8_t generator_letter(Side side) { return side == Side::A ? 1 : 2; }

}  // namespace

ReducedLetterWord ReducedLetterWord::from_letters(std::vector<std::int8_t> letters) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int l = letters[i];
    if (l != 1 && l != -1 && l != 2 && l != -2) throw std::invalid_argument("letter must be one of +-1, +-2");
    if (i > 0 && letters[i - 1] == -l) throw std::invalid_argument("word is not freely reduced");
  }
  ReducedLetterWord w;
  w.letters_ = std::move(letters);
  return w;
}

ReducedLetterWord ReducedLetterWord::parse(std::string_view text) {
  std::vector<std::int8_t> letters;
  for (char c : text) {
    switch (c) {
      case 'a': letters.push_back(1); break;
      case 'A': letters.push_back(-1); break;
      case 'b': letters.push_back(2); break;
      case 'B': letters.push_back(-2); break;
      default: throw std::invalid_argument(std::string("unknown letter '") + c + "'");
    }
  }
  return from_letters(std::move(letters));
}

ReducedLetterWord ReducedLetterWord::from_word(const Splitting& s, const Word& g) {
  require_free_group(s);
  std::vector<std::int8_t> letters;
  std::int64_t total = 0;
  for (const Letter& l : g.letters()) {
    const std::int64_t k = to_int64(l.element.value);
    total += std::abs(k);
    if (total > kMaxExpansion) throw std::length_error("letter expansion too long");
    const std::int8_t x = generator_letter(l.side);
    letters.insert(letters.end(), static_cast<std::size_t>(std::abs(k)), k > 0 ? x : static_cast<std::int8_t>(-x));
  }
  ReducedLetterWord w;
  w.letters_ = std::move(letters);
  return w;
}

Word ReducedLetterWord::to_word(const Splitting& s) const {
  require_free_group(s);
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  for (std::int8_t l : letters_) {
    raw.push_back({std::abs(l) == 1 ? Side::A : Side::B, element(l > 0 ? 1 : -1)});
  }
  return reduce(s, raw);
}

std::string ReducedLetterWord::str() const {
  std::string out;
  for (std::int8_t l : letters_) out.push_back(l == 1 ? 'a' : l == -1 ? 'A' : l == 2 ? 'b' : 'B');
  return out;
}

ReducedLetterWord ReducedLetterWord::inverse() const {
  ReducedLetterWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(static_cast<std::int8_t>(-*it));
  return w;
}

std::int64_t subword_count(const ReducedLetterWord& w, const ReducedLetterWord& g) {
  const auto& pat = w.letters();
  const auto& text = g.letters();
  if (pat.empty() || text.size() < pat.size()) return 0;
  // Knuth-Morris-Pratt; the failure links make overlapping matches count.
  std::vector<std::size_t> fail(pat.size(), 0);
  for (std::size_t i = 1, k = 0; i < pat.size(); ++i) {
    while (k > 0 && pat[i] != pat[k]) k = fail[k - 1];
    if (pat[i] == pat[k]) ++k;
    fail[i] = k;
  }
  std::int64_t count = 0;
  for (std::size_t i = 0, k = 0; i < text.size(); ++i) {
    while (k > 0 && text[i] != pat[k]) k = fail[k - 1];
    if (text[i] == pat[k]) ++k;
    if (k == pat.size()) {
      ++count;
      k = fail[k - 1];
    }
  }
  return count;
}

std::int64_t counting_qm(const ReducedLetterWord& w, const ReducedLetterWord& g) {
  return subword_count(w, g) - subword_count(w.inverse(), g);
}

std::int64_t block_counting(Side side, std::int64_t k, const ReducedLetterWord& g) {
  if (k < 1) throw std::invalid_argument("block counting needs k >= 1");
  const std::int8_t x = generator_letter(side);
  const std::int8_t y = generator_letter(other(side));
  std::int64_t total = 0;
  for (std::int8_t left : {y, static_cast<std::int8_t>(-y)}) {
    for (std::int8_t right : {y, static_cast<std::int8_t>(-y)}) {
      std::vector<std::int8_t> pattern{left};
      pattern.insert(pattern.end(), static_cast<std::size_t>(k), x);
      pattern.push_back(right);
      total += counting_qm(ReducedLetterWord::from_letters(std::move(pattern)), g);
    }
  }
  return total;
}

Rational counting_combination(const SplitQM& f, const Word& g) {
  require_free_group(f.splitting());
  for (Side side : {Side::A, Side::B}) {
    if (!f.factor(side).has_finite_support_only()) {
      throw std::invalid_argument("the counting decomposition needs finite-support factor maps");
    }
  }
  const ReducedLetterWord letters = ReducedLetterWord::from_word(f.splitting(), g);
  Rational out = 0;
  for (Side side : {Side::A, Side::B}) {
    for (const auto& [k, value] : f.factor(side).support) {
      if (k <= 0 || value == 0) continue;
      out += value * block_counting(side, to_int64(k), letters);
    }
  }
  return out;
}

Rational boundary_terms(const SplitQM& f, const Word& g) {
  if (g.empty()) return 0;
  Rational out = eval_factor(f.factor(g.front().side), g.front().element);
  if (g.size() > 1) out += eval_factor(f.factor(g.back().side), g.back().element);
  return out;
}

Rational decomposition_residual(const SplitQM& f, const Word& g) {
  const Rational residual = counting_combination(f, g) - (eval_split(f, g) - boundary_terms(f, g));
  if (residual != 0) {
    throw IdentityViolation("counting decomposition residual " + to_string(residual) + " at " +
                            format_word(f.splitting(), g));
  }
  return residual;
}

}  // namespace splitqm
