#pragma once

#include <cstdint>
#include <vector>

namespace fibecc {

// Raw residue arithmetic. All inputs must already be reduced below m.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Canonical residue of a signed value.
std::uint64_t reduce(std::int64_t a, std::uint64_t m);

/// Inverse of a modulo m by extended Euclid. Throws NotInvertible when
/// gcd(a mod m, m) != 1.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Distinct prime factors of n in ascending order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// A prime p >= 3, checked at construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
};

/// An element of F_p held as its canonical representative in [0, p).
class FieldElement {
 public:
  FieldElement(std::uint64_t value, PrimeModulus modulus);

  std::uint64_t value() const noexcept { return value_; }
  const PrimeModulus& modulus() const noexcept { return modulus_; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const;

  /// Multiplicative inverse; throws NotInvertible for zero.
  FieldElement inverse() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint64_t value_;
  PrimeModulus modulus_;
};

/// base^exponent in F_p by square-and-multiply.
FieldElement mod_pow(const FieldElement& base, std::uint64_t exponent);

/// True iff beta generates the multiplicative group of F_p.
bool is_primitive_element(const FieldElement& beta);

/// Smallest beta >= 2 that generates F_p^*.
FieldElement find_primitive_element(const PrimeModulus& p);

}  // namespace fibecc
