#include "ellmertens/mertens.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ellmertens/errors.hpp"

namespace ellmertens {
namespace {

// cos(k pi / 12) for k in [0, 12], defined where k is a multiple of 2 or 3.
QuadraticSurd cos_twelfths_half_turn(int k) {
  switch (k) {
    case 0: return 1;
    case 2: return QuadraticSurd(0, Rational(1, 2), 3);
    case 3: return QuadraticSurd(0, Rational(1, 2), 2);
    case 4: return Rational(1, 2);
    case 6: return 0;
    case 8: return Rational(-1, 2);
    case 9: return QuadraticSurd(0, Rational(-1, 2), 2);
    case 10: return QuadraticSurd(0, Rational(-1, 2), 3);
    case 12: return -1;
    default: throw std::logic_error("angle is not a multiple of pi/4 or pi/6");
  }
}

QuadraticSurd cos_twelfths(long long k) {
  k %= 24;
  if (k < 0) k += 24;
  if (k > 12) k = 24 - k;
  return cos_twelfths_half_turn(static_cast<int>(k));
}

QuadraticSurd sin_twelfths(long long k) { return cos_twelfths(6 - k); }

// sqrt(q) exactly: p^(m/2), or p^((m-1)/2) sqrt(p).
QuadraticSurd sqrt_of(const PrimePower& q) {
  const BigInt half = boost::multiprecision::pow(BigInt(q.p()), q.m() / 2);
  if (q.m() % 2 == 0) return Rational(half);
  return QuadraticSurd(0, Rational(half), BigInt(q.p()));
}

// (a - 2) / sqrt(4q - a^2) for rational-angle classes, where 4q - a^2 = k q with k in {1,2,3,4}.
QuadraticSurd sine_coefficient(const IsogenyClass& cls) {
  const auto gap = cls.discriminant_gap();
  const auto q = static_cast<std::int64_t>(cls.q.q());
  if (gap % q != 0) throw std::logic_error("rational-angle class with 4q - a^2 not a multiple of q");
  const QuadraticSurd root_gap = QuadraticSurd::sqrt(Rational(gap / q)) * sqrt_of(cls.q);
  return QuadraticSurd(cls.a - 2) / root_gap;
}

}  // namespace

std::string condition_label(TheoremCondition c) {
  switch (c) {
    case TheoremCondition::T1: return "T1";
    case TheoremCondition::T2: return "T2";
    case TheoremCondition::T3: return "T3";
  }
  throw std::logic_error("unknown theorem condition");
}

std::optional<TheoremCondition> theorem_condition(const PrimePower& q, std::int64_t a) {
  const bool m_even = q.m() % 2 == 0;
  if (a == 2 && (q.p() != 2 || q.m() == 1)) return TheoremCondition::T1;
  if (m_even && q.p() % 3 != 1 && a == static_cast<std::int64_t>(q.sqrt_q())) return TheoremCondition::T2;
  if (a == 0 && (!m_even || q.p() % 4 != 1)) return TheoremCondition::T3;
  return std::nullopt;
}

double Limsup::to_double() const {
  return value ? value->to_double() : std::numeric_limits<double>::infinity();
}

std::string Limsup::str() const { return value ? value->str() : "inf"; }

std::string RatioProfile::decimal(std::size_t r) const {
  std::ostringstream os;
  os.precision(50);
  os << values.at(r).to_high_precision();
  return os.str();
}

QuadraticSurd exact_closed_form(const IsogenyClass& cls, std::size_t x) {
  if (!cls.simple_zero()) throw DoubleZero("exact_closed_form: a = ±2√q has no periodic closed form");
  if (!cls.kase.angle) throw NotPeriodic("exact_closed_form: Frobenius angle is an irrational multiple of pi");
  const RationalAngle angle = *cls.kase.angle;
  // X theta = X k pi / n = (12 X k / n) pi / 12; n divides 4 or 6 so 12/n is integral
  const long long twelfths = static_cast<long long>(x % 24) * angle.numerator * (12 / angle.denominator);
  return cos_twelfths(twelfths) - sine_coefficient(cls) * sin_twelfths(twelfths);
}

RatioProfile residue_table(const IsogenyClass& cls) {
  if (!cls.simple_zero()) throw DoubleZero("residue_table: a = ±2√q grows linearly; no periodic table");
  if (!cls.kase.angle) throw NotPeriodic("residue_table: Frobenius angle is an irrational multiple of pi");
  RatioProfile profile{cls, 2 * cls.kase.angle->denominator, {}, 0};
  for (int r = 0; r < profile.period; ++r) {
    profile.values.push_back(exact_closed_form(cls, static_cast<std::size_t>(r)));
    const QuadraticSurd magnitude = profile.values.back().abs();
    if (magnitude > profile.max_abs) profile.max_abs = magnitude;
  }
  return profile;
}

Limsup limsup_ratio(const IsogenyClass& cls) {
  if (!cls.simple_zero()) return Limsup::infinite();
  if (!cls.kase.angle) {
    // Equidistribution of X theta mod 2 pi makes the amplitude the limsup.
    const Rational squared = 1 + Rational((cls.a - 2) * (cls.a - 2), cls.discriminant_gap());
    return Limsup{QuadraticSurd::sqrt(squared)};
  }
  return Limsup{residue_table(cls).max_abs};
}

Verdict verdict(const PrimePower& q, std::int64_t a) { return verdict(classify(q, a)); }

Verdict verdict(const IsogenyClass& cls) {
  Verdict v{cls, false, theorem_condition(cls.q, cls.a), limsup_ratio(cls)};
  v.holds = v.matched_condition.has_value();
  const bool bounded = !v.limsup.is_infinite() && *v.limsup.value <= QuadraticSurd(1);
  if (bounded != v.holds) {
    throw std::logic_error("verdict: theorem conditions and limsup disagree for q=" + std::to_string(cls.q.q()) +
                           ", a=" + std::to_string(cls.a));
  }
  return v;
}

ConjectureCheck conjecture_check_exact(const IsogenyClass& cls, std::size_t x_max) {
  ConjectureCheck check{x_max, std::nullopt, std::nullopt, 0};
  if (x_max == 0) return check;
  const auto series = mobius_coefficients(cls, x_max - 1);
  const BigInt q(cls.q.q());
  BigInt running = 0;
  BigInt q_power = 1;
  for (std::size_t x = 1; x <= x_max; ++x) {
    running += series.coeffs[x - 1];
    q_power *= q;
    if (running * running > q_power) {
      if (!check.first_violation) check.first_violation = x;
      check.last_violation = x;
      ++check.violation_count;
    }
  }
  return check;
}

std::vector<std::size_t> witness_search(const IsogenyClass& cls, const Rational& epsilon, std::size_t x_max) {
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
  const Rational scale = 1 - epsilon;
  const BigInt num = boost::multiprecision::numerator(scale);
  const BigInt den = boost::multiprecision::denominator(scale);
  const BigInt num2 = num * num;
  const BigInt den2 = den * den;

  std::vector<std::size_t> out;
  if (x_max == 0) return out;
  const auto series = mobius_coefficients(cls, x_max - 1);
  const BigInt q(cls.q.q());
  BigInt running = 0;
  BigInt q_power = 1;
  for (std::size_t x = 1; x <= x_max; ++x) {
    running += series.coeffs[x - 1];
    q_power *= q;
    // M^2 > (num/den)^2 q^X  <=>  M^2 den^2 > num^2 q^X
    if (running * running * den2 > num2 * q_power) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> witness_search(const IsogenyClass& cls, const std::string& epsilon, std::size_t x_max) {
  return witness_search(cls, parse_decimal(epsilon), x_max);
}

}  // namespace ellmertens
