#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tempiric {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q" or "p" (optional sign, decimal digits only).
/// Throws ParseError on anything else, including q == 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational &r);

/// Largest integer r >= 0 with r*r <= x (x >= 0).
BigInt isqrt_floor(const Rational &x);

} // namespace tempiric
