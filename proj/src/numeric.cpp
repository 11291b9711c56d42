#include "splitqm/numeric.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace splitqm {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return BigInt(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const BigInt& k) { return k.str(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::int64_t to_int64(const BigInt& k) {
  if (k > std::numeric_limits<std::int64_t>::max() || k < std::numeric_limits<std::int64_t>::min()) {
    throw std::out_of_range("integer " + k.str() + " does not fit in 64 bits");
  }
  return k.convert_to<std::int64_t>();
}

std::int64_t mod_floor(const BigInt& k, std::int64_t n) {
  BigInt r = k % n;
  if (r < 0) r += n;
  return r.convert_to<std::int64_t>();
}

}  // namespace splitqm
