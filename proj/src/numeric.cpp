#include "ellmertens/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ellmertens {

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

bool is_perfect_square(std::uint64_t n, std::uint64_t* root) {
  const std::uint64_t r = isqrt(n);
  if (root != nullptr) *root = r;
  return r * r == n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius: argument must be positive");
  int sign = 1;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

Rational parse_decimal(const std::string& text) {
  BigInt digits = 0;
  BigInt scale = 1;
  bool seen_point = false;
  bool seen_digit = false;
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("malformed decimal: " + text);
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      if (seen_point) scale *= 10;
      seen_digit = true;
    } else {
      throw std::invalid_argument("malformed decimal: " + text);
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed decimal: " + text);
  Rational result(digits, scale);
  return negative ? Rational(-result) : result;
}

}  // namespace ellmertens
