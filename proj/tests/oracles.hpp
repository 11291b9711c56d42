#pragma once

// Independent reference implementations used only by the tests. Word
// oracles work on plain strings over a, A = a^-1, b, B = b^-1. Nothing
// here calls into the library.

#include <cstdint>
#include <string>
#include <vector>

#include "splitqm/numeric.hpp"
#include "splitqm/words.hpp"

namespace splitqm::oracle {

inline char inverse_char(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    default: return 'b';
  }
}

inline std::string free_reduce(const std::string& letters) {
  std::string out;
  for (char c : letters) {
    if (!out.empty() && out.back() == inverse_char(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

inline std::string inverse_string(const std::string& letters) {
  std::string out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back(inverse_char(*it));
  return out;
}

/// Letter expansion of a word over Z * Z: a^3 b^-1 becomes "aaaB".
inline std::string expand(const Word& g) {
  std::string out;
  for (const Letter& l : g.letters()) {
    const std::int64_t k = static_cast<std::int64_t>(l.element.value);
    const char c = l.side == Side::A ? (k > 0 ? 'a' : 'A') : (k > 0 ? 'b' : 'B');
    for (std::int64_t i = 0; i < (k > 0 ? k : -k); ++i) out.push_back(c);
  }
  return out;
}

/// Occurrences of w in g at every offset, overlaps allowed.
inline std::int64_t count_offsets(const std::string& w, const std::string& g) {
  if (w.empty() || g.empty() || w.size() > g.size()) return 0;
  std::int64_t n = 0;
  for (std::size_t i = 0; i + w.size() <= g.size(); ++i)
    if (g.compare(i, w.size(), w) == 0) ++n;
  return n;
}

/// All freely reduced strings of length exactly n.
inline std::vector<std::string> reduced_strings(std::size_t n) {
  std::vector<std::string> out{""};
  for (std::size_t len = 0; len < n; ++len) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : {'a', 'A', 'b', 'B'})
        if (s.empty() || s.back() != inverse_char(c)) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

/// sup |f(x) + f(y) - f(x + y mod n)| for f given on 0..n-1.
inline Rational cyclic_defect(const std::vector<Rational>& f) {
  const std::size_t n = f.size();
  Rational best = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational v = f[x] + f[y] - f[(x + y) % n];
      if (v < 0) v = -v;
      if (v > best) best = v;
    }
  return best;
}

}  // namespace splitqm::oracle
