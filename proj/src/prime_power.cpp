#include "ellmertens/prime_power.hpp"

#include "ellmertens/errors.hpp"
#include "ellmertens/numeric.hpp"

namespace ellmertens {

PrimePower::PrimePower(std::uint64_t p, unsigned m) : p_(p), m_(m), q_(1) {
  if (!is_prime(p)) throw InvalidFieldOrder("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw InvalidFieldOrder("exponent must be positive");
  for (unsigned i = 0; i < m; ++i) {
    if (q_ > kMaxPrimePower / p) {
      throw InvalidFieldOrder(std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^40");
    }
    q_ *= p;
  }
}

PrimePower PrimePower::from_order(std::uint64_t q) {
  if (q < 2 || q > kMaxPrimePower) {
    throw InvalidFieldOrder("field order " + std::to_string(q) + " outside [2, 2^40]");
  }
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned m = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw InvalidFieldOrder(std::to_string(q) + " is not a prime power");
  return PrimePower(p, m);
}

std::uint64_t PrimePower::sqrt_q() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < m_ / 2; ++i) r *= p_;
  return r;
}

std::string PrimePower::str() const {
  if (m_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(m_);
}

std::vector<PrimePower> prime_powers_up_to(std::uint64_t q_max) {
  std::vector<PrimePower> out;
  for (std::uint64_t q = 2; q <= q_max && q <= kMaxPrimePower; ++q) {
    try {
      out.push_back(PrimePower::from_order(q));
    } catch (const InvalidFieldOrder&) {
    }
  }
  return out;
}

}  // namespace ellmertens
