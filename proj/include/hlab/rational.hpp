#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace hlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 50 decimal digits (166-bit mantissa), round-to-nearest. Used wherever a
/// logarithm of an exact rational is reported.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// Parses "a/b", "a" or "-a/b". Throws ParseError on anything else or on a
/// zero denominator.
auto parse_rational(std::string_view text) -> Rational;

/// Always "num/den" in lowest terms, including integers ("1/1").
auto to_string(const Rational& q) -> std::string;

auto to_double(const Rational& q) -> double;

/// log2(q) for q > 0 evaluated as log2(num) - log2(den) in HighFloat.
/// Returns -inf for q == 0.
auto log2_high(const Rational& q) -> HighFloat;

/// Decimal rendering of a HighFloat with the given significant digits.
auto to_string(const HighFloat& x, int digits) -> std::string;

/// Rounds to 15 significant decimal digits, the precision used for every
/// floating-point value the CLI emits.
auto round15(double x) -> double;

/// q^e for e >= 0.
auto pow(const Rational& q, std::uint64_t e) -> Rational;

/// floor(q) for q >= 0.
auto floor_nonneg(const Rational& q) -> BigInt;

} // namespace hlab
