#pragma once

#include <cstddef>
#include <vector>

#include "ellmertens/isogeny.hpp"
#include "ellmertens/numeric.hpp"

namespace ellmertens {

/// Coefficients s_0..s_n of 1 / P(u): s_0 = 1, s_1 = a, s_N = a s_{N-1} - q s_{N-2}.
std::vector<BigInt> reciprocal_l_coefficients(const IsogenyClass& cls, std::size_t n_max);

/// c_N = sum of mu(D) over effective divisors D of degree N, for N = 0..n_max.
struct MobiusSeries {
  IsogenyClass cls;
  std::vector<BigInt> coeffs;
};

/// Coefficients of (1 - u)(1 - qu) / P(u): c_N = s_N - (1 + q) s_{N-1} + q s_{N-2}.
MobiusSeries mobius_coefficients(const IsogenyClass& cls, std::size_t n_max);

/// M(X) = c_0 + ... + c_{X-1} for X = 1..x_max, and M(X) / q^{X/2}.
struct MertensTrajectory {
  IsogenyClass cls;
  std::vector<BigInt> sums;
  std::vector<double> ratios;

  std::size_t x_max() const { return sums.size(); }
  /// X is 1-based.
  const BigInt& M(std::size_t x) const { return sums.at(x - 1); }
  double ratio(std::size_t x) const { return ratios.at(x - 1); }
};

/// Throws std::invalid_argument if x_max == 0.
MertensTrajectory mertens_sums(const IsogenyClass& cls, std::size_t x_max);

/// sign(M) * sqrt(M^2 / q^x) evaluated from the exact integers.
HighPrecision exact_ratio(const BigInt& mertens_value, std::uint64_t q, std::size_t x);

/// M(X) / q^{X/2} from the closed forms: the cosine/sine form for simple
/// zeros, and the linear-growth form for a = +-2 sqrt(q). Evaluated at 50
/// digits internally.
HighPrecision closed_form_ratio_hp(const IsogenyClass& cls, std::size_t x);
double closed_form_ratio(const IsogenyClass& cls, std::size_t x);

struct AmplitudePhase {
  /// 2 sqrt((q + 1 - a) / (4q - a^2)).
  double amplitude;
  /// arctan((a - 2) / sqrt(4q - a^2)), in (-pi/2, pi/2).
  double omega;
};

/// Ratio = amplitude * cos(omega + X theta). Throws DoubleZero for a = +-2 sqrt(q).
AmplitudePhase amplitude_and_phase(const IsogenyClass& cls);

}  // namespace ellmertens
