#pragma once

#include <stdexcept>
#include <string>

namespace ellmertens {

/// Base class for mathematically invalid inputs (as opposed to misuse of the API).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// a^2 > 4q: no curve over F_q can have this trace.
class HasseViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Within the Hasse bound but matching none of Waterhouse's conditions.
class Inadmissible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The L-polynomial has a double root (a = +-2 sqrt(q)).
class DoubleZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Irrational Frobenius angle: the ratio sequence has no period.
class NotPeriodic : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularCurve : public DomainError {
 public:
  using DomainError::DomainError;
};

class FieldTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Not a prime, not a prime power, or outside the supported range.
class InvalidFieldOrder : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ellmertens
