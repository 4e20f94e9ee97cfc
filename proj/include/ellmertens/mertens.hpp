#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ellmertens/isogeny.hpp"
#include "ellmertens/mobius.hpp"
#include "ellmertens/quadratic_surd.hpp"

namespace ellmertens {

/// The three (q, a) families for which |M(X)| <= q^{X/2} holds for all X.
enum class TheoremCondition {
  T1,  ///< a = 2, with p != 2, or p = 2 and m = 1
  T2,  ///< a = sqrt(q), m even, p != 1 (mod 3)
  T3,  ///< a = 0, admissible
};

std::string condition_label(TheoremCondition c);

/// Evaluated from (q, a) alone, without reference to any limsup.
std::optional<TheoremCondition> theorem_condition(const PrimePower& q, std::int64_t a);

/// limsup |M(X)| / q^{X/2}: an exact real quadratic number, or infinite.
struct Limsup {
  std::optional<QuadraticSurd> value;

  static Limsup infinite() { return {}; }
  bool is_infinite() const { return !value.has_value(); }
  /// +inf when infinite.
  double to_double() const;
  std::string str() const;
};

/// Periodic ratio values for a rational-angle class with simple zeros.
struct RatioProfile {
  IsogenyClass cls;
  /// 2n where theta = k pi / n in lowest terms.
  int period;
  /// values[r] = M(X) / q^{X/2} for X = r (mod period).
  std::vector<QuadraticSurd> values;
  QuadraticSurd max_abs;

  /// Value of residue r rendered at 50 significant digits.
  std::string decimal(std::size_t r) const;
};

/// Throws DoubleZero for case 2, NotPeriodic for case 1.
RatioProfile residue_table(const IsogenyClass& cls);

/// Exact cos(X theta) - ((a - 2)/sqrt(4q - a^2)) sin(X theta) for rational-angle simple-zero classes.
QuadraticSurd exact_closed_form(const IsogenyClass& cls, std::size_t x);

/// Case 2: infinite. Case 1: sqrt(1 + (a-2)^2 / (4q - a^2)). Rational angle:
/// the maximum of |ratio| over one period.
Limsup limsup_ratio(const IsogenyClass& cls);

struct Verdict {
  IsogenyClass cls;
  bool holds;
  std::optional<TheoremCondition> matched_condition;
  Limsup limsup;
};

/// Classifies and decides. The theorem conditions and the limsup are
/// computed independently; a disagreement throws std::logic_error.
Verdict verdict(const PrimePower& q, std::int64_t a);
Verdict verdict(const IsogenyClass& cls);

struct ConjectureCheck {
  std::size_t x_max;
  /// Smallest X <= x_max with M(X)^2 > q^X.
  std::optional<std::size_t> first_violation;
  std::optional<std::size_t> last_violation;
  std::size_t violation_count = 0;

  /// At least two violations in the scanned range.
  bool recurs() const { return violation_count >= 2; }
};

/// Exact integer comparison of M(X)^2 against q^X for X = 1..x_max.
ConjectureCheck conjecture_check_exact(const IsogenyClass& cls, std::size_t x_max);

/// All X <= x_max with M(X)^2 > (1 - epsilon)^2 q^X, compared exactly.
/// Throws std::invalid_argument unless 0 < epsilon < 1.
std::vector<std::size_t> witness_search(const IsogenyClass& cls, const Rational& epsilon, std::size_t x_max);
std::vector<std::size_t> witness_search(const IsogenyClass& cls, const std::string& epsilon, std::size_t x_max);

}  // namespace ellmertens
