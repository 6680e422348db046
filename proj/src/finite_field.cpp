#include "fibecc/finite_field.hpp"

#include <array>
#include <string>

#include "fibecc/errors.hpp"

namespace fibecc {

using u128 = unsigned __int128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // a + b may wrap when m > 2^63.
  return a >= m - b ? a - (m - b) : a + b;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  // -(a + 1) avoids overflow for INT64_MIN.
  const std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) + 1) % m;
  return neg == 0 ? 0 : m - neg;
}

std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw NotInvertible("modulus must be positive");
  // Extended Euclid on (a mod m, m) with signed 128-bit cofactors.
  __int128 old_r = reduce(a, m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    const __int128 next_r = old_r - q * r;
    old_r = r;
    r = next_r;
    const __int128 next_s = old_s - q * s;
    old_s = s;
    s = next_s;
  }
  if (old_r != 1) {
    throw NotInvertible(std::to_string(a) + " has no inverse modulo " + std::to_string(m));
  }
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const auto w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (const auto w : kWitnesses) {
    std::uint64_t x = pow_mod(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t q = 2; q <= n / q; ++q) {
    if (n % q != 0) continue;
    factors.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < 3 || !is_prime(p)) {
    throw NotPrime(std::to_string(p) + " is not an odd prime");
  }
}

FieldElement::FieldElement(std::uint64_t value, PrimeModulus modulus)
    : value_(value % modulus.value()), modulus_(modulus) {}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  return {add_mod(value_, rhs.value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  return {sub_mod(value_, rhs.value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  return {mul_mod(value_, rhs.value_, modulus_.value()), modulus_};
}

FieldElement FieldElement::operator-() const {
  return {value_ == 0 ? 0 : modulus_.value() - value_, modulus_};
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw NotInvertible("zero has no inverse in F_p");
  // Fermat: a^(p-2).
  return mod_pow(*this, modulus_.value() - 2);
}

FieldElement mod_pow(const FieldElement& base, std::uint64_t exponent) {
  return {pow_mod(base.value(), exponent, base.modulus().value()), base.modulus()};
}

bool is_primitive_element(const FieldElement& beta) {
  if (beta.value() == 0) return false;
  const std::uint64_t order = beta.modulus().value() - 1;
  for (const auto q : prime_factors(order)) {
    if (mod_pow(beta, order / q).value() == 1) return false;
  }
  return true;
}

FieldElement find_primitive_element(const PrimeModulus& p) {
  const auto factors = prime_factors(p.value() - 1);
  for (std::uint64_t candidate = 2;; ++candidate) {
    bool generator = true;
    for (const auto q : factors) {
      if (pow_mod(candidate, (p.value() - 1) / q, p.value()) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return {candidate, p};
  }
}

}  // namespace fibecc
