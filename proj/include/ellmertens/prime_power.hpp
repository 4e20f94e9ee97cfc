#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ellmertens {

/// Largest field order accepted anywhere in the library.
inline constexpr std::uint64_t kMaxPrimePower = std::uint64_t{1} << 40;

/// A finite-field order q = p^m.
class PrimePower {
 public:
  /// Throws InvalidFieldOrder unless p is prime, m >= 1 and p^m <= kMaxPrimePower.
  PrimePower(std::uint64_t p, unsigned m);

  /// Factors q by trial division. Throws InvalidFieldOrder if q is not a prime power.
  static PrimePower from_order(std::uint64_t q);

  std::uint64_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }

  bool is_square() const { return m_ % 2 == 0; }
  /// p^(m/2); only meaningful when is_square().
  std::uint64_t sqrt_q() const;

  std::string str() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

 private:
  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
};

/// All prime powers 2 <= q <= q_max, ascending.
std::vector<PrimePower> prime_powers_up_to(std::uint64_t q_max);

}  // namespace ellmertens
