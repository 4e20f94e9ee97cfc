#include "ellmertens/quadratic_surd.hpp"

#include <stdexcept>

namespace ellmertens {
namespace {

bool is_square(const BigInt& n, BigInt* root = nullptr) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  if (root != nullptr) *root = r;
  return r * r == n;
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

QuadraticSurd::QuadraticSurd(Rational rational, Rational coefficient, BigInt radicand)
    : rational_(std::move(rational)), coefficient_(std::move(coefficient)), radicand_(std::move(radicand)) {
  if (radicand_ <= 0) throw std::domain_error("radicand must be positive");
  normalize();
}

QuadraticSurd QuadraticSurd::sqrt(const Rational& value) {
  if (value < 0) throw std::domain_error("square root of a negative rational");
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  // sqrt(n/d) = sqrt(n*d) / d
  return QuadraticSurd(0, Rational(1, den), num * den);
}

void QuadraticSurd::normalize() {
  if (coefficient_ == 0) {
    radicand_ = 1;
    return;
  }
  BigInt root;
  if (is_square(radicand_, &root)) {
    rational_ += coefficient_ * root;
    coefficient_ = 0;
    radicand_ = 1;
    return;
  }
  // Pull out small square factors so that common radicands compare equal.
  for (unsigned f = 2; f < 1000; ++f) {
    const BigInt square = BigInt(f) * f;
    if (square > radicand_) break;
    while (radicand_ % square == 0) {
      radicand_ /= square;
      coefficient_ *= f;
    }
  }
}

int QuadraticSurd::sign() const {
  const int s1 = sign_of(rational_);
  const int s2 = sign_of(coefficient_);
  if (s2 == 0) return s1;
  if (s1 == 0 || s1 == s2) return s2;
  // Opposite signs: compare rational^2 with coefficient^2 * radicand.
  const Rational lhs = rational_ * rational_;
  const Rational rhs = coefficient_ * coefficient_ * Rational(radicand_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? s1 : s2;
}

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd out = *this;
  out.rational_ = -out.rational_;
  out.coefficient_ = -out.coefficient_;
  return out;
}

Rational QuadraticSurd::aligned_coefficient(const QuadraticSurd& rhs) {
  if (rhs.coefficient_ == 0) return 0;
  if (coefficient_ == 0) {
    radicand_ = rhs.radicand_;
    return rhs.coefficient_;
  }
  if (radicand_ == rhs.radicand_) return rhs.coefficient_;
  // sqrt(d2) = sqrt(d1 * d2) / d1 * sqrt(d1) when d1 * d2 is a square.
  BigInt root;
  if (!is_square(radicand_ * rhs.radicand_, &root)) {
    throw std::domain_error("surds from different quadratic fields");
  }
  return rhs.coefficient_ * Rational(root, radicand_);
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& rhs) {
  const Rational c = aligned_coefficient(rhs);
  rational_ += rhs.rational_;
  coefficient_ += c;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& rhs) { return *this += -rhs; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& rhs) {
  if (rhs.coefficient_ == 0) {
    rational_ *= rhs.rational_;
    coefficient_ *= rhs.rational_;
    normalize();
    return *this;
  }
  if (coefficient_ == 0) {
    const Rational r = rational_;
    rational_ = r * rhs.rational_;
    coefficient_ = r * rhs.coefficient_;
    radicand_ = rhs.radicand_;
    normalize();
    return *this;
  }
  if (rational_ == 0 && rhs.rational_ == 0) {
    // b1 sqrt(d1) * b2 sqrt(d2) = b1 b2 sqrt(d1 d2), whatever the fields
    coefficient_ *= rhs.coefficient_;
    radicand_ *= rhs.radicand_;
    normalize();
    return *this;
  }
  const Rational c = aligned_coefficient(rhs);
  const Rational a1 = rational_, b1 = coefficient_;
  const Rational a2 = rhs.rational_;
  rational_ = a1 * a2 + b1 * c * Rational(radicand_);
  coefficient_ = a1 * c + b1 * a2;
  normalize();
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("division by zero surd");
  if (rhs.coefficient_ == 0) {
    rational_ /= rhs.rational_;
    coefficient_ /= rhs.rational_;
    normalize();
    return *this;
  }
  // 1 / (a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d)
  const Rational norm = rhs.rational_ * rhs.rational_ - rhs.coefficient_ * rhs.coefficient_ * Rational(rhs.radicand_);
  const QuadraticSurd conjugate(rhs.rational_ / norm, -rhs.coefficient_ / norm, rhs.radicand_);
  return *this *= conjugate;
}

HighPrecision QuadraticSurd::to_high_precision() const {
  HighPrecision value = HighPrecision(boost::multiprecision::numerator(rational_)) /
                        HighPrecision(boost::multiprecision::denominator(rational_));
  if (coefficient_ != 0) {
    value += HighPrecision(boost::multiprecision::numerator(coefficient_)) /
             HighPrecision(boost::multiprecision::denominator(coefficient_)) *
             boost::multiprecision::sqrt(HighPrecision(radicand_));
  }
  return value;
}

std::string QuadraticSurd::str() const {
  if (coefficient_ == 0) return to_string(rational_);
  std::string surd;
  const Rational magnitude = coefficient_ < 0 ? Rational(-coefficient_) : coefficient_;
  if (magnitude != 1) surd = to_string(magnitude) + "*";
  surd += "sqrt(" + radicand_.str() + ")";
  if (rational_ == 0) return (coefficient_ < 0 ? "-" : "") + surd;
  return to_string(rational_) + (coefficient_ < 0 ? " - " : " + ") + surd;
}

}  // namespace ellmertens
