#include "ellmertens/mobius.hpp"

#include <cmath>
#include <stdexcept>

#include "ellmertens/errors.hpp"

namespace ellmertens {

std::vector<BigInt> reciprocal_l_coefficients(const IsogenyClass& cls, std::size_t n_max) {
  std::vector<BigInt> s;
  s.reserve(n_max + 1);
  s.emplace_back(1);
  if (n_max >= 1) s.emplace_back(cls.a);
  const BigInt q(cls.q.q());
  for (std::size_t n = 2; n <= n_max; ++n) s.push_back(cls.a * s[n - 1] - q * s[n - 2]);
  return s;
}

MobiusSeries mobius_coefficients(const IsogenyClass& cls, std::size_t n_max) {
  const auto s = reciprocal_l_coefficients(cls, n_max);
  const BigInt q(cls.q.q());
  MobiusSeries out{cls, {}};
  out.coeffs.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    BigInt c = s[n];
    if (n >= 1) c -= (1 + q) * s[n - 1];
    if (n >= 2) c += q * s[n - 2];
    out.coeffs.push_back(std::move(c));
  }
  return out;
}

HighPrecision exact_ratio(const BigInt& mertens_value, std::uint64_t q, std::size_t x) {
  if (mertens_value == 0) return 0;
  const BigInt q_power = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(x));
  const HighPrecision magnitude = boost::multiprecision::sqrt(HighPrecision(mertens_value * mertens_value) / HighPrecision(q_power));
  return mertens_value < 0 ? HighPrecision(-magnitude) : magnitude;
}

MertensTrajectory mertens_sums(const IsogenyClass& cls, std::size_t x_max) {
  if (x_max == 0) throw std::invalid_argument("mertens_sums: x_max must be positive");
  const auto series = mobius_coefficients(cls, x_max - 1);
  MertensTrajectory out{cls, {}, {}};
  out.sums.reserve(x_max);
  out.ratios.reserve(x_max);

  BigInt running = 0;
  BigInt q_power = 1;
  const BigInt q(cls.q.q());
  for (std::size_t x = 1; x <= x_max; ++x) {
    running += series.coeffs[x - 1];
    q_power *= q;
    out.sums.push_back(running);
    if (running == 0) {
      out.ratios.push_back(0.0);
      continue;
    }
    const HighPrecision magnitude = boost::multiprecision::sqrt(HighPrecision(running * running) / HighPrecision(q_power));
    const double r = static_cast<double>(magnitude);
    out.ratios.push_back(running < 0 ? -r : r);
  }
  return out;
}

HighPrecision closed_form_ratio_hp(const IsogenyClass& cls, std::size_t x) {
  if (x == 0) throw std::invalid_argument("closed_form_ratio: X must be positive");
  const HighPrecision X(static_cast<unsigned long long>(x));
  const HighPrecision root_q = boost::multiprecision::sqrt(HighPrecision(cls.q.q()));

  if (cls.kase.tag == CaseTag::C2i) {
    // -(1 - 1/sqrt q) X + 1
    return HighPrecision(1) - (HighPrecision(1) - 1 / root_q) * X;
  }
  if (cls.kase.tag == CaseTag::C2ii) {
    // -(-1)^X (1 + 1/sqrt q) X + (-1)^X
    const HighPrecision sign = x % 2 == 0 ? 1 : -1;
    return sign * (HighPrecision(1) - (HighPrecision(1) + 1 / root_q) * X);
  }

  const HighPrecision a(static_cast<long long>(cls.a));
  const HighPrecision gap_root = boost::multiprecision::sqrt(HighPrecision(cls.discriminant_gap()));
  const HighPrecision theta = boost::multiprecision::atan2(gap_root, a);
  const HighPrecision sine_coeff = (a - 2) / gap_root;
  return boost::multiprecision::cos(X * theta) - sine_coeff * boost::multiprecision::sin(X * theta);
}

double closed_form_ratio(const IsogenyClass& cls, std::size_t x) {
  return static_cast<double>(closed_form_ratio_hp(cls, x));
}

AmplitudePhase amplitude_and_phase(const IsogenyClass& cls) {
  if (!cls.simple_zero()) {
    throw DoubleZero("amplitude_and_phase: a = ±2√q gives a double inverse zero");
  }
  const auto gap = static_cast<double>(cls.discriminant_gap());
  const auto q = static_cast<double>(cls.q.q());
  const auto a = static_cast<double>(cls.a);
  return {2.0 * std::sqrt((q + 1.0 - a) / gap), std::atan((a - 2.0) / std::sqrt(gap))};
}

}  // namespace ellmertens
