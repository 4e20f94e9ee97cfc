#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ellmertens/prime_power.hpp"

namespace ellmertens {

/// Largest order accepted by make_field.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// Coefficients c_0..c_deg over F_p, lowest degree first.
using PolynomialFp = std::vector<std::uint64_t>;

/// True if the monic polynomial `f` (degree >= 1) has no monic factor of
/// degree 1..deg/2 over F_p.
bool is_irreducible(const PolynomialFp& f, std::uint64_t p);

class FieldElement;

/// F_{p^m} modelled as F_p[x] / (f) for a monic irreducible f of degree m.
/// Cheap to copy; copies share the same modulus.
class FiniteField {
 public:
  const PrimePower& order() const { return impl_->order; }
  std::uint64_t q() const { return impl_->order.q(); }
  std::uint64_t p() const { return impl_->order.p(); }
  unsigned degree() const { return impl_->order.m(); }

  /// Monic modulus, lowest degree first, leading 1 included.
  const PolynomialFp& modulus() const { return impl_->modulus; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The image of an integer under Z -> F_p -> F_q.
  FieldElement from_integer(std::int64_t n) const;
  /// Element whose base-p digits are its coefficients; 0 <= index < q.
  FieldElement element(std::uint64_t index) const;
  std::string modulus_str() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.impl_ == b.impl_ || (a.order() == b.order() && a.modulus() == b.modulus());
  }

 private:
  struct Impl {
    PrimePower order;
    PolynomialFp modulus;
  };
  explicit FiniteField(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;

  friend FiniteField make_field(std::uint64_t p, unsigned m);
  friend FiniteField make_field_with_modulus(std::uint64_t p, PolynomialFp modulus);
};

/// Field with the lexicographically smallest monic irreducible modulus of
/// degree m (coefficients compared from x^{m-1} down to x^0).
/// Throws InvalidFieldOrder for non-prime p or p^m > kMaxFieldOrder.
FiniteField make_field(std::uint64_t p, unsigned m);

/// Field with an explicit modulus; throws InvalidFieldOrder if it is not monic irreducible.
FiniteField make_field_with_modulus(std::uint64_t p, PolynomialFp modulus);

class FieldElement {
 public:
  const FiniteField& field() const { return field_; }
  std::span<const std::uint64_t> coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::uint64_t index() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }

  /// Throws std::domain_error for zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  std::string str() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldElement(FiniteField field, std::vector<std::uint64_t> coeffs)
      : field_(std::move(field)), coeffs_(std::move(coeffs)) {}

  void require_same_field(const FieldElement& other) const;

  FiniteField field_;
  std::vector<std::uint64_t> coeffs_;

  friend class FiniteField;
};

}  // namespace ellmertens
