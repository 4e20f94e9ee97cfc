#include "ellmertens/finite_field.hpp"

#include <stdexcept>

#include "ellmertens/errors.hpp"

namespace ellmertens {
namespace {

void trim(PolynomialFp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % p);
    base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
    e >>= 1;
  }
  return result;
}

// Remainder of f modulo a nonzero g over F_p.
PolynomialFp remainder(PolynomialFp f, const PolynomialFp& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - factor * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

// Steps through the monic polynomials of a fixed degree in the modulus order:
// the x^{deg-1} coefficient is most significant.
bool next_monic(PolynomialFp& f, std::uint64_t p) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (++f[i] < p) return true;
    f[i] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible(const PolynomialFp& f, std::uint64_t p) {
  PolynomialFp g = f;
  trim(g);
  if (g.size() < 2 || g.back() != 1) return false;
  const std::size_t degree = g.size() - 1;
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    PolynomialFp divisor(d + 1, 0);
    divisor[d] = 1;
    do {
      if (remainder(g, divisor, p).empty()) return false;
    } while (next_monic(divisor, p));
  }
  return true;
}

FiniteField make_field_with_modulus(std::uint64_t p, PolynomialFp modulus) {
  trim(modulus);
  if (modulus.size() < 2) throw InvalidFieldOrder("modulus must have positive degree");
  PrimePower order(p, static_cast<unsigned>(modulus.size() - 1));
  if (order.q() > kMaxFieldOrder) {
    throw InvalidFieldOrder("field order " + std::to_string(order.q()) + " exceeds 2^20");
  }
  for (auto c : modulus) {
    if (c >= p) throw InvalidFieldOrder("modulus coefficients must lie in [0, p)");
  }
  if (!is_irreducible(modulus, p)) throw InvalidFieldOrder("modulus is not monic irreducible");
  return FiniteField(std::make_shared<const FiniteField::Impl>(FiniteField::Impl{order, std::move(modulus)}));
}

FiniteField make_field(std::uint64_t p, unsigned m) {
  PrimePower order(p, m);
  if (order.q() > kMaxFieldOrder) {
    throw InvalidFieldOrder("field order " + std::to_string(order.q()) + " exceeds 2^20");
  }
  PolynomialFp candidate(m + 1, 0);
  candidate[m] = 1;
  do {
    if (is_irreducible(candidate, p)) {
      return FiniteField(std::make_shared<const FiniteField::Impl>(FiniteField::Impl{order, candidate}));
    }
  } while (next_monic(candidate, p));
  throw std::logic_error("no irreducible polynomial found");  // unreachable: one always exists
}

FieldElement FiniteField::zero() const { return FieldElement(*this, std::vector<std::uint64_t>(degree(), 0)); }

FieldElement FiniteField::one() const { return from_integer(1); }

FieldElement FiniteField::from_integer(std::int64_t n) const {
  std::vector<std::uint64_t> c(degree(), 0);
  const auto pp = static_cast<std::int64_t>(p());
  c[0] = static_cast<std::uint64_t>(((n % pp) + pp) % pp);
  return FieldElement(*this, std::move(c));
}

FieldElement FiniteField::element(std::uint64_t index) const {
  if (index >= q()) throw std::out_of_range("element index outside [0, q)");
  std::vector<std::uint64_t> c(degree(), 0);
  for (auto& digit : c) {
    digit = index % p();
    index /= p();
  }
  return FieldElement(*this, std::move(c));
}

std::string FiniteField::modulus_str() const {
  std::string out;
  const auto& f = modulus();
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || f[i] != 1) out += std::to_string(f[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

void FieldElement::require_same_field(const FieldElement& other) const {
  if (!(field_ == other.field_)) throw std::invalid_argument("field elements from different fields");
}

bool FieldElement::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::uint64_t FieldElement::index() const {
  std::uint64_t result = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) result = result * field_.p() + coeffs_[i];
  return result;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  const auto p = field_.p();
  for (auto& c : out.coeffs_) c = (p - c) % p;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  const auto p = field_.p();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + rhs.coeffs_[i]) % p;
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  const auto p = field_.p();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = (coeffs_[i] + p - rhs.coeffs_[i]) % p;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  const auto p = field_.p();
  const std::size_t m = coeffs_.size();
  // p < 2^20, so every partial product fits comfortably in 64 bits.
  std::vector<std::uint64_t> product(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      product[i + j] = (product[i + j] + coeffs_[i] * rhs.coeffs_[j]) % p;
    }
  }
  const auto& f = field_.modulus();
  for (std::size_t k = product.size(); k-- > m;) {
    const std::uint64_t lead = product[k];
    if (lead == 0) continue;
    for (std::size_t i = 0; i < m; ++i) {
      product[k - m + i] = (product[k - m + i] + p - lead * f[i] % p) % p;
    }
    product[k] = 0;
  }
  product.resize(m);
  coeffs_ = std::move(product);
  return *this;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return pow(field_.q() - 2);
}

std::string FieldElement::str() const {
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || coeffs_[i] != 1) out += std::to_string(coeffs_[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

}  // namespace ellmertens
