#include "splitqm/words.hpp"

#include <cctype>
#include <stdexcept>

#include "splitqm/errors.hpp"

namespace splitqm {

Splitting::Splitting(FactorDescriptor a, FactorDescriptor b) : a_(std::move(a)), b_(std::move(b)) {
  for (const auto* d : {&a_, &b_}) {
    if (d->is_finite() && d->size() < 2) {
      throw std::invalid_argument("splitting factor " + d->name() + " is trivial");
    }
  }
}

Splitting free_group_splitting() { return Splitting(FactorDescriptor::integer(), FactorDescriptor::integer()); }

bool operator<(const Word& x, const Word& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Letter& l = x[i];
    const Letter& r = y[i];
    if (l.side != r.side) return l.side < r.side;
    if (l.element != r.element) return l.element < r.element;
  }
  return false;
}

bool is_normal_form(const Splitting& s, const Word& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Letter& l = g[i];
    if (!is_valid(s.factor(l.side), l.element)) return false;
    if (is_identity(s.factor(l.side), l.element)) return false;
    if (i > 0 && g[i - 1].side == l.side) return false;
  }
  return true;
}

namespace {

// Appends one letter to a normal form, merging at the junction.
void push_reduced(const Splitting& s, std::vector<Letter>& out, const Letter& letter) {
  const FactorDescriptor& d = s.factor(letter.side);
  if (is_identity(d, letter.element)) return;
  if (!out.empty() && out.back().side == letter.side) {
    FactorElement merged = multiply(d, out.back().element, letter.element);
    if (is_identity(d, merged)) {
      out.pop_back();
    } else {
      out.back().element = std::move(merged);
    }
    return;
  }
  out.push_back(letter);
}

}  // namespace

Word reduce(const Splitting& s, std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    validate(s.factor(l.side), l.element);
    push_reduced(s, out, l);
  }
  return Word::from_normal_form(std::move(out));
}

Word letter_word(const Splitting& s, Side side, const FactorElement& x) {
  const Letter l{side, x};
  return reduce(s, std::span<const Letter>(&l, 1));
}

Word multiply(const Splitting& s, const Word& g, const Word& h) {
  std::vector<Letter> out = g.letters();
  std::size_t i = 0;
  // Cancel or merge across the junction; after a cancellation the next
  // letters of h again meet a same-side letter of g.
  while (i < h.size() && !out.empty() && out.back().side == h[i].side) {
    const FactorDescriptor& d = s.factor(h[i].side);
    FactorElement merged = multiply(d, out.back().element, h[i].element);
    ++i;
    if (is_identity(d, merged)) {
      out.pop_back();
      continue;
    }
    out.back().element = std::move(merged);
    break;
  }
  out.insert(out.end(), h.letters().begin() + static_cast<std::ptrdiff_t>(i), h.letters().end());
  return Word::from_normal_form(std::move(out));
}

Word invert(const Splitting& s, const Word& g) {
  std::vector<Letter> out;
  out.reserve(g.size());
  for (auto it = g.letters().rbegin(); it != g.letters().rend(); ++it) {
    out.push_back({it->side, invert(s.factor(it->side), it->element)});
  }
  return Word::from_normal_form(std::move(out));
}

Word power(const Splitting& s, const Word& g, const BigInt& n) {
  Word base = n < 0 ? invert(s, g) : g;
  BigInt e = n < 0 ? BigInt(-n) : n;
  Word result;
  while (e > 0) {
    if ((e & 1) != 0) result = multiply(s, result, base);
    e >>= 1;
    if (e > 0) base = multiply(s, base, base);
  }
  return result;
}

Word conjugate(const Splitting& s, const Word& w, const Word& g) {
  return multiply(s, multiply(s, w, g), invert(s, w));
}

CyclicReduction cyclically_reduce(const Splitting& s, const Word& g) {
  std::vector<Letter> core = g.letters();
  std::vector<Letter> conj;
  // Peel x ... y with x, y in the same factor: x u y = y^-1 (yx u) y.
  while (core.size() >= 2 && core.front().side == core.back().side) {
    const Side side = core.front().side;
    const FactorDescriptor& d = s.factor(side);
    const FactorElement y = core.back().element;
    const FactorElement yx = multiply(d, y, core.front().element);
    conj.push_back({side, invert(d, y)});
    core.pop_back();
    if (is_identity(d, yx)) {
      core.erase(core.begin());
    } else {
      core.front().element = yx;
    }
  }
  // conj holds y1^-1, y2^-1, ... with g = y1^-1 y2^-1 ... core ... ; the
  // conjugator letters alternate because successive peels switch sides.
  return {Word::from_normal_form(std::move(core)), reduce(s, conj)};
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), start + 1});
  }
  return out;
}

BigInt parse_exponent(std::string_view text, std::size_t column) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(column, "bad exponent '" + std::string(text) + "'");
  }
}

Letter parse_token(const Splitting& s, const Token& tok) {
  std::string_view t = tok.text;
  Side side;
  FactorElement base;
  std::size_t pos;
  if (t[0] == 'a' || t[0] == 'b') {
    side = t[0] == 'a' ? Side::A : Side::B;
    const FactorDescriptor& d = s.factor(side);
    if (d.kind() == FactorKind::FiniteTable) {
      throw ParseError(tok.column, std::string("factor ") + side_name(side) + " is a table group; use " +
                                       side_name(side) + "[i]");
    }
    base = generator(d);
    pos = 1;
  } else if (t[0] == 'A' || t[0] == 'B') {
    side = t[0] == 'A' ? Side::A : Side::B;
    const auto close = t.find(']');
    if (t.size() < 3 || t[1] != '[' || close == std::string_view::npos) {
      throw ParseError(tok.column, "expected " + std::string(1, t[0]) + "[index]");
    }
    const BigInt idx = parse_exponent(t.substr(2, close - 2), tok.column + 2);
    base = FactorElement{idx};
    if (!is_valid(s.factor(side), base)) {
      throw ParseError(tok.column + 2, "element " + idx.str() + " is not in factor " + s.factor(side).name());
    }
    pos = close + 1;
  } else {
    throw ParseError(tok.column, "unknown generator '" + std::string(t) + "'");
  }
  if (pos == t.size()) return {side, base};
  if (t[pos] != '^' || pos + 1 == t.size()) {
    throw ParseError(tok.column + pos, "expected '^exponent'");
  }
  const BigInt k = parse_exponent(t.substr(pos + 1), tok.column + pos + 1);
  return {side, power(s.factor(side), base, k)};
}

}  // namespace

Word parse_word(const Splitting& s, std::string_view text) {
  std::vector<Letter> raw;
  for (const Token& tok : tokenize(text)) raw.push_back(parse_token(s, tok));
  return reduce(s, raw);
}

std::string format_word(const Splitting& s, const Word& g) {
  std::string out;
  for (const Letter& l : g.letters()) {
    if (!out.empty()) out += ' ';
    const FactorDescriptor& d = s.factor(l.side);
    if (d.kind() == FactorKind::FiniteTable) {
      out += side_name(l.side);
      out += '[' + l.element.value.str() + ']';
    } else {
      out += l.side == Side::A ? 'a' : 'b';
      if (l.element.value != 1) out += '^' + l.element.value.str();
    }
  }
  return out;
}

WordSampler::WordSampler(Splitting s, std::size_t length_bound, std::int64_t exponent_bound, std::uint64_t seed)
    : splitting_(std::move(s)), length_bound_(length_bound), exponent_bound_(exponent_bound), engine_(seed) {
  if (exponent_bound_ < 1) throw std::invalid_argument("exponent bound must be >= 1");
}

FactorElement WordSampler::next_nontrivial(Side side) {
  const FactorDescriptor& d = splitting_.factor(side);
  switch (d.kind()) {
    case FactorKind::Integer: {
      std::uniform_int_distribution<std::int64_t> dist(1, exponent_bound_);
      std::bernoulli_distribution neg(0.5);
      const std::int64_t k = dist(engine_);
      return element(neg(engine_) ? -k : k);
    }
    case FactorKind::Cyclic: {
      std::uniform_int_distribution<std::int64_t> dist(1, d.modulus() - 1);
      return element(dist(engine_));
    }
    case FactorKind::FiniteTable: {
      std::uniform_int_distribution<std::size_t> dist(0, d.size() - 2);
      std::size_t idx = dist(engine_);
      if (idx >= d.identity_index()) ++idx;
      return element(static_cast<std::int64_t>(idx));
    }
  }
  throw std::logic_error("unreachable");
}

Word WordSampler::next_with_length(std::size_t length, Side first) {
  std::vector<Letter> letters;
  letters.reserve(length);
  Side side = first;
  for (std::size_t i = 0; i < length; ++i) {
    letters.push_back({side, next_nontrivial(side)});
    side = other(side);
  }
  return Word::from_normal_form(std::move(letters));
}

Word WordSampler::next() {
  std::uniform_int_distribution<std::size_t> len(0, length_bound_);
  std::bernoulli_distribution start(0.5);
  const std::size_t n = len(engine_);
  const Side first = start(engine_) ? Side::A : Side::B;
  return next_with_length(n, first);
}

Word random_word(const Splitting& s, std::size_t length_bound, std::int64_t exponent_bound, std::uint64_t seed) {
  WordSampler sampler(s, length_bound, exponent_bound, seed);
  return sampler.next();
}

std::pair<Word, Word> junction_pair(WordSampler& sampler, Side side, const FactorElement& x, const FactorElement& y) {
  std::vector<Letter> left = sampler.next().letters();
  if (!left.empty() && left.back().side == side) left.pop_back();
  left.push_back({side, x});
  std::vector<Letter> right = sampler.next().letters();
  if (!right.empty() && right.front().side == side) right.erase(right.begin());
  right.insert(right.begin(), {side, y});
  return {Word::from_normal_form(std::move(left)), Word::from_normal_form(std::move(right))};
}

namespace {

std::vector<FactorElement> letters_for(const FactorDescriptor& d, std::int64_t bound) {
  std::vector<FactorElement> out;
  if (d.is_finite()) {
    for (const auto& x : enumerate(d))
      if (!is_identity(d, x)) out.push_back(x);
  } else {
    for (std::int64_t k = -bound; k <= bound; ++k)
      if (k != 0) out.push_back(element(k));
  }
  return out;
}

void extend(std::vector<Word>& out, std::vector<Letter>& prefix, std::size_t remaining, Side side,
            const std::vector<FactorElement>& a_letters, const std::vector<FactorElement>& b_letters) {
  if (remaining == 0) return;
  for (const auto& x : side == Side::A ? a_letters : b_letters) {
    prefix.push_back({side, x});
    out.push_back(Word::from_normal_form(prefix));
    extend(out, prefix, remaining - 1, other(side), a_letters, b_letters);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> all_words(const Splitting& s, std::size_t max_length, std::int64_t exponent_bound_a,
                            std::int64_t exponent_bound_b) {
  const auto a_letters = letters_for(s.a(), exponent_bound_a);
  const auto b_letters = letters_for(s.b(), exponent_bound_b);
  std::vector<Word> out{Word{}};
  std::vector<Letter> prefix;
  extend(out, prefix, max_length, Side::A, a_letters, b_letters);
  extend(out, prefix, max_length, Side::B, a_letters, b_letters);
  return out;
}

}  // namespace splitqm
