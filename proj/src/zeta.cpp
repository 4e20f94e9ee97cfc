#include "ellmertens/zeta.hpp"

#include <stdexcept>

namespace ellmertens {

std::string LPolynomial::str() const {
  std::string out = std::to_string(coeff0);
  if (coeff1 != 0) {
    const auto mag = coeff1 < 0 ? -coeff1 : coeff1;
    out += (coeff1 < 0 ? " - " : " + ") + (mag == 1 ? std::string() : std::to_string(mag)) + "u";
  }
  if (coeff2 != 0) out += " + " + std::to_string(coeff2) + "u^2";
  return out;
}

LPolynomial l_polynomial(const IsogenyClass& cls) {
  return LPolynomial{1, -cls.a, static_cast<std::int64_t>(cls.q.q())};
}

std::vector<BigInt> frobenius_power_traces(std::int64_t a, std::uint64_t q, std::size_t n) {
  std::vector<BigInt> out;
  out.reserve(n + 1);
  out.emplace_back(2);
  if (n >= 1) out.emplace_back(a);
  for (std::size_t k = 2; k <= n; ++k) out.push_back(a * out[k - 1] - BigInt(q) * out[k - 2]);
  return out;
}

ExtensionCounts extension_counts(const IsogenyClass& cls, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("extension_counts: n_max must be positive");
  const std::uint64_t q = cls.q.q();
  const auto all_traces = frobenius_power_traces(cls.a, q, n_max);

  ExtensionCounts out;
  BigInt q_power = 1;
  for (std::size_t k = 1; k <= n_max; ++k) {
    q_power *= q;
    out.traces.push_back(all_traces[k]);
    out.points.push_back(q_power + 1 - all_traces[k]);
  }
  // Moebius inversion of N_d = sum_{e | d} e b_e.
  for (std::size_t d = 1; d <= n_max; ++d) {
    BigInt total = 0;
    for (std::size_t e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      const int mu = moebius(d / e);
      if (mu != 0) total += mu * out.points[e - 1];
    }
    if (total % d != 0) throw std::logic_error("closed point count is not integral");
    out.closed_points.push_back(total / d);
  }
  return out;
}

}  // namespace ellmertens
