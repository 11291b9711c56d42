#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace splitqm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const BigInt& k) { return k.sign(); }
inline int sign(const Rational& q) { return q.sign(); }

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& k);

double to_double(const Rational& q);

/// Narrows to int64, throwing std::out_of_range when the value does not fit.
std::int64_t to_int64(const BigInt& k);

/// Non-negative remainder of k modulo n (n > 0).
std::int64_t mod_floor(const BigInt& k, std::int64_t n);

}  // namespace splitqm
