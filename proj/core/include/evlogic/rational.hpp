#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace evlogic {

/// Exact rational number. All probabilities and masses in this library are
/// kept as rationals end to end so that equality checks are exact.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer "p", or a plain decimal such as "0.075".
/// Decimals are converted exactly (0.075 -> 3/40). Throws ParseError.
Rat parse_rational(std::string_view text);

/// Canonical "p/q" form, denominator always written ("0/1", "81/82").
std::string to_fraction_string(const Rat& r);

/// Fixed-point decimal approximation, `digits` places, round half away
/// from zero ("81/82" -> "0.987805").
std::string to_decimal_string(const Rat& r, int digits = 6);

/// Absolute value.
Rat rat_abs(const Rat& r);

} // namespace evlogic
