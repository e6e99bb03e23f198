#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "fibsum/errors.hpp"

namespace fibsum {

// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always kept canonical: gcd(num, den) == 1,
// den > 0, and zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

// Builds num/den in canonical form. Throws ZeroDenominator if den == 0.
Rat make_rat(const BigInt& num, const BigInt& den);

// base^e with integer (possibly negative) exponent.
// Throws ZeroToNegativePower when base == 0 and e < 0. base^0 == 1.
Rat rat_pow(const Rat& base, long long e);

// Renders "p/q", or just "p" when q == 1. The sign lives on p.
std::string rat_str(const Rat& r);

// Strict inverse of rat_str: optional '-', digits, optionally '/' digits.
// Throws SyntaxError on malformed text, ZeroDenominator on q == 0.
Rat rat_parse(std::string_view text);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Numerator of an integral rational. Throws NonIntegerValue otherwise.
BigInt to_integer(const Rat& r, const char* what_part = "value");

// Floor division (round toward minus infinity). b must be positive.
BigInt floor_div(const BigInt& a, const BigInt& b);

// Conversion to a machine integer with range check.
long long to_ll(const BigInt& v, const char* what_part = "value");

} // namespace fibsum
