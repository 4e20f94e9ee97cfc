#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ellmertens/errors.hpp"
#include "ellmertens/mertens.hpp"

using namespace ellmertens;

namespace {

PrimePower Q(std::uint64_t q) { return PrimePower::from_order(q); }
QuadraticSurd sqrt_of(long long n) { return QuadraticSurd::sqrt(n); }

}  // namespace

TEST_CASE("verdict examples") {
  const auto v1 = verdict(Q(2), 2);
  CHECK(v1.holds);
  CHECK(v1.matched_condition == TheoremCondition::T1);

  const auto v2 = verdict(Q(9), 3);
  CHECK(v2.holds);
  CHECK(v2.matched_condition == TheoremCondition::T2);

  const auto v3 = verdict(Q(9), -3);
  CHECK_FALSE(v3.holds);
  CHECK_FALSE(v3.matched_condition.has_value());
  CHECK(*v3.limsup.value == QuadraticSurd(Rational(4, 3)));

  const auto v4 = verdict(Q(49), 0);
  CHECK(v4.holds);
  CHECK(v4.matched_condition == TheoremCondition::T3);

  CHECK(verdict(Q(4), 2).matched_condition == TheoremCondition::T2);
  CHECK_FALSE(verdict(Q(8), 4).holds);  // 4i with m = 3
  CHECK(verdict(Q(7), 2).matched_condition == TheoremCondition::T1);

  CHECK_THROWS_AS(verdict(Q(25), 0), Inadmissible);
  CHECK_THROWS_AS(verdict(Q(5), 5), HasseViolation);
}

TEST_CASE("limsup_ratio examples") {
  CHECK(*limsup_ratio(classify(Q(9), -3)).value == QuadraticSurd(Rational(4, 3)));

  const auto l2 = limsup_ratio(classify(Q(8), -4));
  CHECK(*l2.value == sqrt_of(2) + QuadraticSurd::sqrt(Rational(1, 8)));
  CHECK(l2.to_double() == doctest::Approx(1.76777).epsilon(1e-5));

  const auto l3 = limsup_ratio(classify(Q(3), 3));
  CHECK(*l3.value == 2 / sqrt_of(3));
  CHECK(l3.to_double() == doctest::Approx(1.15470).epsilon(1e-5));

  CHECK(*limsup_ratio(classify(Q(27), 9)).value == QuadraticSurd(Rational(5, 3)));
  CHECK(limsup_ratio(classify(Q(4), 4)).is_infinite());
  CHECK(limsup_ratio(classify(Q(9), -6)).is_infinite());
  CHECK(*limsup_ratio(classify(Q(2), -1)).value == 4 / sqrt_of(7));
  CHECK(*limsup_ratio(classify(Q(11), 2)).value == QuadraticSurd(1));
}

TEST_CASE("residue_table examples") {
  const auto t = residue_table(classify(Q(9), 0));
  CHECK(t.period == 4);
  CHECK(t.values == std::vector<QuadraticSurd>{1, Rational(1, 3), -1, Rational(-1, 3)});

  const auto t2 = residue_table(classify(Q(4), 2));
  CHECK(t2.period == 6);
  CHECK(t2.values[2] == QuadraticSurd(Rational(-1, 2)));

  const auto t3 = residue_table(classify(Q(3), 3));
  CHECK(t3.period == 12);
  CHECK(t3.values[4] == QuadraticSurd(-1));
  CHECK(residue_table(classify(Q(27), 9)).values[4] == QuadraticSurd(Rational(-5, 3)));

  CHECK(t.decimal(1).substr(0, 20) == "0.333333333333333333");

  CHECK_THROWS_AS(residue_table(classify(Q(4), 4)), DoubleZero);
  CHECK_THROWS_AS(residue_table(classify(Q(7), 3)), NotPeriodic);
}

TEST_CASE("periods per case") {
  CHECK(residue_table(classify(Q(4), 2)).period == 6);    // 3i
  CHECK(residue_table(classify(Q(4), -2)).period == 6);   // 3ii
  CHECK(residue_table(classify(Q(2), 2)).period == 8);    // 4i
  CHECK(residue_table(classify(Q(2), -2)).period == 8);   // 4ii
  CHECK(residue_table(classify(Q(3), 3)).period == 12);   // 4iii
  CHECK(residue_table(classify(Q(3), -3)).period == 12);  // 4iv
  CHECK(residue_table(classify(Q(5), 0)).period == 4);    // 5
}

TEST_CASE("conjecture_check_exact examples") {
  CHECK_FALSE(conjecture_check_exact(classify(Q(9), 3), 500).first_violation.has_value());
  // M(2)^2 = 36 > 9 already, and M(3)^2 = 225 > 27
  const auto c33 = conjecture_check_exact(classify(Q(3), -3), 10);
  CHECK(c33.first_violation == 2u);
  CHECK(conjecture_check_exact(classify(Q(3), -3), 3).violation_count == 2);

  const auto c = conjecture_check_exact(classify(Q(2), -1), 10000);
  REQUIRE(c.first_violation.has_value());
  MESSAGE("first violation for (2, -1): X = " << *c.first_violation);
  CHECK(c.recurs());
}

TEST_CASE("witness_search examples") {
  const auto w1 = witness_search(classify(Q(2), 2), "0.5", 10);
  CHECK(std::find(w1.begin(), w1.end(), 3u) != w1.end());

  CHECK(witness_search(classify(Q(9), 0), "0.1", 10) == std::vector<std::size_t>{2, 4, 6, 8, 10});

  // epsilon close to 1: every X with M(X) != 0
  const auto cls = classify(Q(5), 3);
  const auto t = mertens_sums(cls, 30);
  std::vector<std::size_t> nonzero;
  for (std::size_t x = 1; x <= 30; ++x)
    if (t.M(x) != 0) nonzero.push_back(x);
  CHECK(witness_search(cls, "0.99999999999999999999999999999999", 30) == nonzero);

  CHECK_THROWS_AS(witness_search(cls, "0", 10), std::invalid_argument);
  CHECK_THROWS_AS(witness_search(cls, "1", 10), std::invalid_argument);
  CHECK_THROWS_AS(witness_search(cls, "abc", 10), std::invalid_argument);
}

TEST_CASE("verdict and limsup agree for all admissible q <= 64") {
  for (const auto& q : prime_powers_up_to(64)) {
    for (auto a : admissible_traces(q)) {
      const auto v = verdict(q, a);
      const double l = v.limsup.to_double();
      CHECK(v.holds == (l <= 1 + 1e-12));
      CHECK(v.holds == v.matched_condition.has_value());
      if (!v.holds) CHECK((v.limsup.is_infinite() || l > 1));
    }
  }
}

TEST_CASE("rational-angle limsup is attained by exact sums") {
  for (const auto& q : prime_powers_up_to(81)) {
    for (auto a : admissible_traces(q)) {
      const auto cls = classify(q, a);
      if (!cls.kase.is_rational_angle() || !cls.simple_zero()) continue;
      const auto profile = residue_table(cls);
      const auto limsup = limsup_ratio(cls);
      CHECK(*limsup.value == profile.max_abs);
      const std::size_t period = static_cast<std::size_t>(profile.period);
      const auto t = mertens_sums(cls, 3 * period);
      double best = 0;
      for (std::size_t x = 1; x <= 3 * period; ++x) {
        const double exact = static_cast<double>(exact_ratio(t.M(x), q.q(), x));
        CHECK(std::abs(profile.values[x % period].to_double() - exact) < 1e-12);
        best = std::max(best, std::abs(exact));
        if (profile.values[x % period].abs() == profile.max_abs) {
          CHECK(std::abs(std::abs(exact) - profile.max_abs.to_double()) < 1e-12);
        }
      }
      CHECK(std::abs(best - profile.max_abs.to_double()) < 1e-12);
    }
  }
}

TEST_CASE("irrational-angle running max approaches the amplitude") {
  for (auto [q, a] : std::vector<std::pair<std::uint64_t, std::int64_t>>{
           {2, 1}, {2, -1}, {3, 1}, {3, -1}, {3, 2}, {3, -2}, {5, 1}, {5, -1}}) {
    const auto cls = classify(Q(q), a);
    const double limsup = limsup_ratio(cls).to_double();
    const auto t = mertens_sums(cls, 10000);
    double running = 0;
    for (std::size_t x = 1; x <= 10000; ++x) {
      running = std::max(running, std::abs(t.ratio(x)));
      REQUIRE(running <= limsup + 1e-9);
    }
    CHECK(running >= limsup - 0.05);
  }
}

TEST_CASE("double-zero classes grow linearly (exact, X <= 100)") {
  for (const auto& q : prime_powers_up_to(128)) {
    if (!q.is_square()) continue;
    const auto r = static_cast<std::int64_t>(q.sqrt_q());
    for (auto a : {2 * r, -2 * r}) {
      const auto t = mertens_sums(classify(q, a), 100);
      for (std::size_t x = 1; x <= 100; ++x) {
        // |M| / r^X >= (1 - 1/r) X - 1  <=>  r |M| >= ((r - 1) X - r) r^X
        const BigInt rhs = BigInt((r - 1) * static_cast<std::int64_t>(x) - r) *
                           boost::multiprecision::pow(BigInt(r), static_cast<unsigned>(x));
        const BigInt lhs = r * boost::multiprecision::abs(t.M(x));
        CHECK(lhs >= rhs);
      }
    }
  }
}
