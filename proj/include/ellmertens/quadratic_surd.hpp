#pragma once

#include <compare>
#include <string>

#include "ellmertens/numeric.hpp"

namespace ellmertens {

/// An exact real number rational + coefficient * sqrt(radicand).
///
/// The radicand is a positive integer that is not a perfect square; small
/// square factors are pulled out into the coefficient. When the coefficient
/// is zero the radicand is normalized to 1. Two surds can be added only when
/// they live in the same quadratic field (radicand product a perfect square);
/// otherwise std::domain_error is thrown.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational value) : rational_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(long long value) : rational_(value) {}            // NOLINT(google-explicit-constructor)
  QuadraticSurd(Rational rational, Rational coefficient, BigInt radicand);

  /// sqrt(value) for a nonnegative rational.
  static QuadraticSurd sqrt(const Rational& value);

  const Rational& rational_part() const { return rational_; }
  const Rational& coefficient() const { return coefficient_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_rational() const { return coefficient_ == 0; }

  int sign() const;
  QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

  QuadraticSurd operator-() const;
  QuadraticSurd& operator+=(const QuadraticSurd& rhs);
  QuadraticSurd& operator-=(const QuadraticSurd& rhs);
  QuadraticSurd& operator*=(const QuadraticSurd& rhs);
  QuadraticSurd& operator/=(const QuadraticSurd& rhs);

  friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
  friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
  friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
  friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }

  friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign() == 0; }
  friend std::strong_ordering operator<=>(const QuadraticSurd& a, const QuadraticSurd& b) {
    return (a - b).sign() <=> 0;
  }

  HighPrecision to_high_precision() const;
  double to_double() const { return static_cast<double>(to_high_precision()); }

  /// e.g. "-1 + 1/3*sqrt(3)", "5/4*sqrt(2)", "-3/2".
  std::string str() const;

 private:
  void normalize();
  /// Rewrites rhs's surd coefficient over this->radicand_ (or adopts rhs's radicand).
  Rational aligned_coefficient(const QuadraticSurd& rhs);

  Rational rational_{0};
  Rational coefficient_{0};
  BigInt radicand_{1};
};

}  // namespace ellmertens
