#include "ellmertens/isogeny.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ellmertens/errors.hpp"
#include "ellmertens/numeric.hpp"

namespace ellmertens {
namespace {

std::uint64_t power(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

bool is_plus_minus(std::int64_t a, std::uint64_t value) {
  const auto v = static_cast<std::int64_t>(value);
  return a == v || a == -v;
}

void check_hasse(const PrimePower& q, std::int64_t a) {
  if (a * a > 4 * static_cast<std::int64_t>(q.q())) {
    throw HasseViolation("Hasse bound violated: a^2 = " + std::to_string(a * a) + " > 4q = " +
                         std::to_string(4 * q.q()));
  }
}

}  // namespace

double RationalAngle::radians() const { return numerator * std::numbers::pi / denominator; }

std::string RationalAngle::str() const {
  if (numerator == 0) return "0";
  std::string out = numerator == 1 ? "pi" : std::to_string(numerator) + "pi";
  if (denominator != 1) out += "/" + std::to_string(denominator);
  return out;
}

WaterhouseCase waterhouse_case(CaseTag tag) {
  switch (tag) {
    case CaseTag::C1: return {tag, std::nullopt};
    case CaseTag::C2i: return {tag, RationalAngle{0, 1}};
    case CaseTag::C2ii: return {tag, RationalAngle{1, 1}};
    case CaseTag::C3i: return {tag, RationalAngle{1, 3}};
    case CaseTag::C3ii: return {tag, RationalAngle{2, 3}};
    case CaseTag::C4i: return {tag, RationalAngle{1, 4}};
    case CaseTag::C4ii: return {tag, RationalAngle{3, 4}};
    case CaseTag::C4iii: return {tag, RationalAngle{1, 6}};
    case CaseTag::C4iv: return {tag, RationalAngle{5, 6}};
    case CaseTag::C5: return {tag, RationalAngle{1, 2}};
  }
  throw std::logic_error("unknown case tag");
}

std::string case_label(CaseTag tag) {
  switch (tag) {
    case CaseTag::C1: return "1";
    case CaseTag::C2i: return "2i";
    case CaseTag::C2ii: return "2ii";
    case CaseTag::C3i: return "3i";
    case CaseTag::C3ii: return "3ii";
    case CaseTag::C4i: return "4i";
    case CaseTag::C4ii: return "4ii";
    case CaseTag::C4iii: return "4iii";
    case CaseTag::C4iv: return "4iv";
    case CaseTag::C5: return "5";
  }
  throw std::logic_error("unknown case tag");
}

CaseTag parse_case_label(const std::string& label) {
  for (auto tag : {CaseTag::C1, CaseTag::C2i, CaseTag::C2ii, CaseTag::C3i, CaseTag::C3ii, CaseTag::C4i,
                   CaseTag::C4ii, CaseTag::C4iii, CaseTag::C4iv, CaseTag::C5}) {
    if (case_label(tag) == label) return tag;
  }
  throw std::invalid_argument("unknown case label: " + label);
}

std::int64_t IsogenyClass::discriminant_gap() const { return 4 * static_cast<std::int64_t>(q.q()) - a * a; }

std::int64_t hasse_bound(const PrimePower& q) { return static_cast<std::int64_t>(isqrt(4 * q.q())); }

std::vector<CaseTag> matching_conditions(const PrimePower& q, std::int64_t a) {
  std::vector<CaseTag> out;
  const auto p = q.p();
  const unsigned m = q.m();
  const bool m_even = m % 2 == 0;
  const auto four_q = 4 * static_cast<std::int64_t>(q.q());

  if (a % static_cast<std::int64_t>(p) != 0 && a * a < four_q) out.push_back(CaseTag::C1);
  if (m_even) {
    const std::uint64_t root = q.sqrt_q();
    if (a == 2 * static_cast<std::int64_t>(root)) out.push_back(CaseTag::C2i);
    if (a == -2 * static_cast<std::int64_t>(root)) out.push_back(CaseTag::C2ii);
    if (p % 3 != 1) {
      if (a == static_cast<std::int64_t>(root)) out.push_back(CaseTag::C3i);
      if (a == -static_cast<std::int64_t>(root)) out.push_back(CaseTag::C3ii);
    }
  } else if (p == 2 || p == 3) {
    // sqrt(pq) = p^((m+1)/2) when m is odd.
    const auto root = static_cast<std::int64_t>(power(p, (m + 1) / 2));
    if (a == root) out.push_back(p == 2 ? CaseTag::C4i : CaseTag::C4iii);
    if (a == -root) out.push_back(p == 2 ? CaseTag::C4ii : CaseTag::C4iv);
  }
  if (a == 0 && (!m_even || p % 4 != 1)) out.push_back(CaseTag::C5);
  return out;
}

IsogenyClass classify(const PrimePower& q, std::int64_t a) {
  check_hasse(q, a);
  const auto p = q.p();
  const unsigned m = q.m();
  const bool m_even = m % 2 == 0;

  std::optional<CaseTag> tag;
  if (m_even && is_plus_minus(a, 2 * q.sqrt_q())) {
    tag = a > 0 ? CaseTag::C2i : CaseTag::C2ii;
  } else if (m_even && p % 3 != 1 && is_plus_minus(a, q.sqrt_q())) {
    tag = a > 0 ? CaseTag::C3i : CaseTag::C3ii;
  } else if (!m_even && p == 2 && is_plus_minus(a, power(2, (m + 1) / 2))) {
    tag = a > 0 ? CaseTag::C4i : CaseTag::C4ii;
  } else if (!m_even && p == 3 && is_plus_minus(a, power(3, (m + 1) / 2))) {
    tag = a > 0 ? CaseTag::C4iii : CaseTag::C4iv;
  } else if (a == 0 && (!m_even || p % 4 != 1)) {
    tag = CaseTag::C5;
  } else if (a % static_cast<std::int64_t>(p) != 0) {
    tag = CaseTag::C1;  // a^2 < 4q: equality forces m even and a = +-2 sqrt(q), handled above
  }

  if (!tag) {
    if (a == 0) throw Inadmissible("inadmissible: p ≡ 1 (mod 4) with m even");
    if (m_even && is_plus_minus(a, q.sqrt_q())) throw Inadmissible("inadmissible: p ≡ 1 (mod 3) with m even");
    throw Inadmissible("inadmissible: a ≡ 0 (mod p) and a is not a special supersingular trace");
  }

  IsogenyClass cls{q, a, waterhouse_case(*tag), 0.0};
  cls.theta = cls.kase.angle ? cls.kase.angle->radians() : frobenius_angle(q, a);
  return cls;
}

std::vector<std::int64_t> admissible_traces(const PrimePower& q) {
  std::vector<std::int64_t> out;
  const std::int64_t bound = hasse_bound(q);
  for (std::int64_t a = -bound; a <= bound; ++a) {
    try {
      classify(q, a);
      out.push_back(a);
    } catch (const Inadmissible&) {
    }
  }
  return out;
}

double frobenius_angle(const PrimePower& q, std::int64_t a) {
  check_hasse(q, a);
  // atan2 of (sqrt(4q - a^2), a) is better conditioned near the ends than acos.
  const auto gap = static_cast<long double>(4 * static_cast<std::int64_t>(q.q()) - a * a);
  return static_cast<double>(std::atan2(std::sqrt(gap), static_cast<long double>(a)));
}

}  // namespace ellmertens
