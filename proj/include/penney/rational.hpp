#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace penney {

// All probabilities, odds and waiting times are exact rationals. Waiting
// times over large alphabets exceed 2^63 (a 7-letter word over a 26-symbol
// alphabet already needs 26^14 in an intermediate product), so fixed-width
// numerators are not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts a fraction "3/4", a finite decimal "0.75" / ".5", or an integer
// "2", with an optional leading '-'. Anything else (including a zero
// denominator) raises ParseError.
Rational parse_rational(std::string_view text);

// "3/8", "7", "-32/7". Always the reduced form.
std::string fraction_string(const Rational& value);

// Fixed-point rendering with round-half-to-even at `digits` places.
// With trim_trailing_zeros the fractional part is shortened ("0.375000"
// becomes "0.375", "5.000000" becomes "5").
std::string decimal_string(const Rational& value, int digits,
                           bool trim_trailing_zeros = false);

double to_double(const Rational& value);

}  // namespace penney
