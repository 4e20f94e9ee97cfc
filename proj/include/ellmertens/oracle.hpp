#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ellmertens/finite_field.hpp"
#include "ellmertens/isogeny.hpp"
#include "ellmertens/numeric.hpp"

namespace ellmertens {

inline constexpr std::size_t kProductOracleMaxDegree = 64;
inline constexpr std::uint64_t kCensusDefaultMaxOrder = 16;

/// Coefficients c_0..c_{n_max} of prod_{d <= n_max} (1 - u^d)^{b_d}, with b_d
/// the closed-point counts. Throws std::invalid_argument above degree 64.
std::vector<BigInt> product_oracle(const IsogenyClass& cls, std::size_t n_max);

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a finite field.
struct WeierstrassCurve {
  FieldElement a1, a2, a3, a4, a6;

  const FiniteField& field() const { return a1.field(); }

  FieldElement b2() const;
  FieldElement b4() const;
  FieldElement b6() const;
  FieldElement b8() const;
  FieldElement discriminant() const;
};

struct PointCount {
  std::int64_t n1;     ///< affine solutions plus the point at infinity
  std::int64_t trace;  ///< q + 1 - n1
};

/// Exhaustive count over F_q x F_q. Throws SingularCurve if the discriminant vanishes.
PointCount count_points(const WeierstrassCurve& curve);

struct TraceCensus {
  PrimePower q;
  std::vector<std::int64_t> realized_traces;
  /// Number of nonsingular coefficient tuples (a1, a2, a3, a4, a6) per trace.
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t singular_tuples = 0;
};

struct CensusOptions {
  /// Lift the q <= 16 cap.
  bool force = false;
  /// 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Enumerates every long Weierstrass equation over F_q and records the traces
/// of the nonsingular ones. Throws FieldTooLarge for q > 16 unless forced.
TraceCensus trace_census(const PrimePower& q, CensusOptions options = {});

}  // namespace ellmertens
