#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ellmertens/isogeny.hpp"
#include "ellmertens/numeric.hpp"

namespace ellmertens {

/// P(u) = 1 - a u + q u^2, the numerator of the zeta function.
struct LPolynomial {
  std::int64_t coeff0 = 1;
  std::int64_t coeff1 = 0;
  std::int64_t coeff2 = 0;

  /// coeff1^2 - 4 coeff0 coeff2 = a^2 - 4q; never positive for an admissible class.
  std::int64_t discriminant() const { return coeff1 * coeff1 - 4 * coeff0 * coeff2; }
  BigInt evaluate(const BigInt& u) const { return coeff0 + coeff1 * u + coeff2 * u * u; }
  std::string str() const;
};

LPolynomial l_polynomial(const IsogenyClass& cls);

/// Point counts over F_{q^k}, k = 1..n. Index k-1 holds level k.
struct ExtensionCounts {
  /// a_k = gamma1^k + gamma2^k.
  std::vector<BigInt> traces;
  /// N_k = #E(F_{q^k}) = q^k + 1 - a_k.
  std::vector<BigInt> points;
  /// b_d = number of closed points of degree d.
  std::vector<BigInt> closed_points;

  std::size_t levels() const { return traces.size(); }
};

/// a_0..a_n via a_{k+1} = a a_k - q a_{k-1}, a_0 = 2, a_1 = a.
std::vector<BigInt> frobenius_power_traces(std::int64_t a, std::uint64_t q, std::size_t n);

/// Throws std::invalid_argument if n_max == 0.
ExtensionCounts extension_counts(const IsogenyClass& cls, std::size_t n_max);

}  // namespace ellmertens
