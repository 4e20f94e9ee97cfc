#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellmertens/prime_power.hpp"

namespace ellmertens {

/// The ten sub-cases of Waterhouse's classification of Frobenius traces.
enum class CaseTag { C1, C2i, C2ii, C3i, C3ii, C4i, C4ii, C4iii, C4iv, C5 };

/// theta = numerator * pi / denominator, in lowest terms.
struct RationalAngle {
  int numerator;
  int denominator;

  double radians() const;
  /// "0", "pi", "pi/4", "3pi/4", ...
  std::string str() const;
  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;
};

struct WaterhouseCase {
  CaseTag tag;
  /// Empty exactly for C1, whose angle is an irrational multiple of pi.
  std::optional<RationalAngle> angle;

  bool is_rational_angle() const { return angle.has_value(); }
};

/// The fixed case/angle pairing (C2i -> 0, C3i -> pi/3, ..., C5 -> pi/2).
WaterhouseCase waterhouse_case(CaseTag tag);

/// "1", "2i", "2ii", ..., "4iv", "5".
std::string case_label(CaseTag tag);
CaseTag parse_case_label(const std::string& label);

/// An admissible (q, a) pair. Construct through classify().
struct IsogenyClass {
  PrimePower q;
  std::int64_t a;
  WaterhouseCase kase;
  /// arccos(a / (2 sqrt q)) in [0, pi].
  double theta;

  /// False when a = +-2 sqrt(q) (double inverse zero).
  bool simple_zero() const { return kase.tag != CaseTag::C2i && kase.tag != CaseTag::C2ii; }
  /// 4q - a^2, the negated discriminant of the L-polynomial.
  std::int64_t discriminant_gap() const;
};

/// floor(2 sqrt q).
std::int64_t hasse_bound(const PrimePower& q);

/// Every condition of the classification that (q, a) satisfies, tested
/// independently of each other. Admissible pairs match exactly one.
std::vector<CaseTag> matching_conditions(const PrimePower& q, std::int64_t a);

/// Throws HasseViolation if a^2 > 4q, Inadmissible if no condition matches.
IsogenyClass classify(const PrimePower& q, std::int64_t a);

/// All a for which classify(q, a) succeeds, ascending.
std::vector<std::int64_t> admissible_traces(const PrimePower& q);

/// arccos(a / (2 sqrt q)); throws HasseViolation if a^2 > 4q.
double frobenius_angle(const PrimePower& q, std::int64_t a);

}  // namespace ellmertens
