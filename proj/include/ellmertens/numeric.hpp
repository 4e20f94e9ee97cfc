#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace ellmertens {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 50 significant decimal digits; used wherever an exact quantity has to be
/// turned into a real number.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

inline std::string to_string(const BigInt& value) { return value.str(); }

/// "n" or "n/d" in lowest terms.
std::string to_string(const Rational& value);

/// Floor of the square root of a nonnegative 64-bit integer.
std::uint64_t isqrt(std::uint64_t n);

/// Exact square root if n is a perfect square.
bool is_perfect_square(std::uint64_t n, std::uint64_t* root = nullptr);

bool is_prime(std::uint64_t n);

/// Classical Moebius function of a positive integer.
int moebius(std::uint64_t n);

/// Rounds to 15 significant digits (the precision used for emitted ratios).
double round_significant(double value, int digits = 15);

/// Parses a plain decimal literal ("0.25", ".5", "1") into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_decimal(const std::string& text);

}  // namespace ellmertens
