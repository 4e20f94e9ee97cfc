#include "ellmertens/oracle.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

#include "ellmertens/errors.hpp"
#include "ellmertens/zeta.hpp"

namespace ellmertens {

std::vector<BigInt> product_oracle(const IsogenyClass& cls, std::size_t n_max) {
  if (n_max > kProductOracleMaxDegree) throw std::invalid_argument("product_oracle: n_max above 64");
  std::vector<BigInt> product(n_max + 1, 0);
  product[0] = 1;
  if (n_max == 0) return product;

  const auto counts = extension_counts(cls, n_max);
  for (std::size_t d = 1; d <= n_max; ++d) {
    const BigInt& b = counts.closed_points[d - 1];
    // (1 - u^d)^b = sum_j (-1)^j C(b, j) u^{dj}
    std::vector<BigInt> factor(n_max / d + 1);
    BigInt binom = 1;
    for (std::size_t j = 0; j < factor.size(); ++j) {
      if (j > 0) binom = binom * (b - (j - 1)) / j;
      factor[j] = j % 2 == 0 ? binom : BigInt(-binom);
    }
    std::vector<BigInt> next(n_max + 1, 0);
    for (std::size_t i = 0; i <= n_max; ++i) {
      if (product[i] == 0) continue;
      for (std::size_t j = 0; i + d * j <= n_max; ++j) next[i + d * j] += product[i] * factor[j];
    }
    product = std::move(next);
  }
  return product;
}

FieldElement WeierstrassCurve::b2() const { return a1 * a1 + field().from_integer(4) * a2; }

FieldElement WeierstrassCurve::b4() const { return field().from_integer(2) * a4 + a1 * a3; }

FieldElement WeierstrassCurve::b6() const { return a3 * a3 + field().from_integer(4) * a6; }

FieldElement WeierstrassCurve::b8() const {
  return a1 * a1 * a6 + field().from_integer(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}

FieldElement WeierstrassCurve::discriminant() const {
  const auto& F = field();
  const FieldElement c2 = b2(), c4 = b4(), c6 = b6(), c8 = b8();
  return -(c2 * c2 * c8) - F.from_integer(8) * c4 * c4 * c4 - F.from_integer(27) * c6 * c6 +
         F.from_integer(9) * c2 * c4 * c6;
}

PointCount count_points(const WeierstrassCurve& curve) {
  if (curve.discriminant().is_zero()) throw SingularCurve("count_points: discriminant is zero");
  const auto& F = curve.field();
  const std::uint64_t q = F.q();
  std::int64_t affine = 0;
  for (std::uint64_t xi = 0; xi < q; ++xi) {
    const FieldElement x = F.element(xi);
    const FieldElement rhs = x * x * x + curve.a2 * x * x + curve.a4 * x + curve.a6;
    const FieldElement linear = curve.a1 * x + curve.a3;
    for (std::uint64_t yi = 0; yi < q; ++yi) {
      const FieldElement y = F.element(yi);
      if (y * y + linear * y == rhs) ++affine;
    }
  }
  const std::int64_t n1 = affine + 1;
  return {n1, static_cast<std::int64_t>(q) + 1 - n1};
}

namespace {

// Index-encoded arithmetic tables for a small field.
struct FieldTables {
  std::uint32_t q;
  std::vector<std::uint32_t> add, mul;
  std::vector<std::uint32_t> neg;
  std::vector<std::uint32_t> constant;  // images of 0..27 in F_q
  // roots[l * q + r] = #{y : y^2 + l y = r}
  std::vector<std::uint32_t> roots;

  explicit FieldTables(const FiniteField& F) : q(static_cast<std::uint32_t>(F.q())) {
    std::vector<FieldElement> elements;
    for (std::uint32_t i = 0; i < q; ++i) elements.push_back(F.element(i));
    add.resize(q * q);
    mul.resize(q * q);
    neg.resize(q);
    for (std::uint32_t i = 0; i < q; ++i) {
      neg[i] = static_cast<std::uint32_t>((-elements[i]).index());
      for (std::uint32_t j = 0; j < q; ++j) {
        add[i * q + j] = static_cast<std::uint32_t>((elements[i] + elements[j]).index());
        mul[i * q + j] = static_cast<std::uint32_t>((elements[i] * elements[j]).index());
      }
    }
    for (int n = 0; n <= 27; ++n) constant.push_back(static_cast<std::uint32_t>(F.from_integer(n).index()));
    roots.assign(q * q, 0);
    for (std::uint32_t l = 0; l < q; ++l) {
      for (std::uint32_t y = 0; y < q; ++y) ++roots[l * q + add[mul[y * q + y] * q + mul[l * q + y]]];
    }
  }

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * q + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * q + b]; }
  std::uint32_t minus(std::uint32_t a, std::uint32_t b) const { return add[a * q + neg[b]]; }
};

bool singular(const FieldTables& t, std::uint32_t a1, std::uint32_t a2, std::uint32_t a3, std::uint32_t a4,
              std::uint32_t a6) {
  const auto c = [&](int n) { return t.constant[n]; };
  const std::uint32_t b2 = t.plus(t.times(a1, a1), t.times(c(4), a2));
  const std::uint32_t b4 = t.plus(t.times(c(2), a4), t.times(a1, a3));
  const std::uint32_t b6 = t.plus(t.times(a3, a3), t.times(c(4), a6));
  std::uint32_t b8 = t.plus(t.times(t.times(a1, a1), a6), t.times(t.times(c(4), a2), a6));
  b8 = t.minus(b8, t.times(t.times(a1, a3), a4));
  b8 = t.plus(b8, t.times(a2, t.times(a3, a3)));
  b8 = t.minus(b8, t.times(a4, a4));
  std::uint32_t delta = t.neg[t.times(t.times(b2, b2), b8)];
  delta = t.minus(delta, t.times(c(8), t.times(b4, t.times(b4, b4))));
  delta = t.minus(delta, t.times(c(27), t.times(b6, b6)));
  delta = t.plus(delta, t.times(c(9), t.times(b2, t.times(b4, b6))));
  return delta == 0;
}

struct PartialCensus {
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t singular = 0;
};

PartialCensus census_slice(const FieldTables& t, std::uint32_t a1) {
  PartialCensus out;
  const std::uint32_t q = t.q;
  std::vector<std::uint32_t> cubes(q), squares(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    squares[x] = t.times(x, x);
    cubes[x] = t.times(squares[x], x);
  }
  for (std::uint32_t a2 = 0; a2 < q; ++a2)
    for (std::uint32_t a3 = 0; a3 < q; ++a3)
      for (std::uint32_t a4 = 0; a4 < q; ++a4)
        for (std::uint32_t a6 = 0; a6 < q; ++a6) {
          if (singular(t, a1, a2, a3, a4, a6)) {
            ++out.singular;
            continue;
          }
          std::int64_t affine = 0;
          for (std::uint32_t x = 0; x < q; ++x) {
            const std::uint32_t rhs =
                t.plus(t.plus(cubes[x], t.times(a2, squares[x])), t.plus(t.times(a4, x), a6));
            const std::uint32_t linear = t.plus(t.times(a1, x), a3);
            affine += t.roots[linear * q + rhs];
          }
          ++out.counts[static_cast<std::int64_t>(q) - affine];  // q + 1 - (affine + 1)
        }
  return out;
}

}  // namespace

TraceCensus trace_census(const PrimePower& q, CensusOptions options) {
  if (q.q() > kCensusDefaultMaxOrder && !options.force) {
    throw FieldTooLarge("trace_census: q = " + std::to_string(q.q()) + " exceeds 16 (pass force to override)");
  }
  const FiniteField F = make_field(q.p(), q.m());
  const FieldTables tables(F);

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, tables.q);

  // a1 values are dealt round-robin to the workers.
  std::vector<std::future<PartialCensus>> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&tables, w, threads] {
      PartialCensus merged;
      for (std::uint32_t a1 = w; a1 < tables.q; a1 += threads) {
        PartialCensus part = census_slice(tables, a1);
        merged.singular += part.singular;
        for (const auto& [trace, n] : part.counts) merged.counts[trace] += n;
      }
      return merged;
    }));
  }

  TraceCensus census{q, {}, {}, 0};
  for (auto& worker : workers) {
    PartialCensus part = worker.get();
    census.singular_tuples += part.singular;
    for (const auto& [trace, n] : part.counts) census.counts[trace] += n;
  }
  for (const auto& [trace, n] : census.counts) census.realized_traces.push_back(trace);
  return census;
}

}  // namespace ellmertens
