#include "fibecc/keyspace.hpp"

#include <algorithm>

#include "fibecc/errors.hpp"
#include "fibecc/finite_field.hpp"

namespace fibecc {

std::string Scientific::to_string() const {
  std::string out(1, digits.front());
  if (digits.size() > 1) out += "." + digits.substr(1);
  out += exponent < 0 ? "e-" : "e+";
  const auto magnitude = std::to_string(exponent < 0 ? -exponent : exponent);
  if (magnitude.size() < 2) out += '0';
  out += magnitude;
  return out;
}

Scientific to_scientific(const BigRational& value, std::size_t significant, Rounding mode) {
  if (value <= 0) throw RangeError("scientific rendering needs a positive value");
  if (significant == 0) throw RangeError("need at least one significant digit");
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);

  // Normalise so that 1 <= num/den < 10, tracking the power of ten.
  int exponent = 0;
  while (num >= den * 10) {
    den *= 10;
    ++exponent;
  }
  while (num < den) {
    num *= 10;
    --exponent;
  }

  BigInt scale = 1;
  for (std::size_t i = 1; i < significant; ++i) scale *= 10;
  BigInt mantissa = (num * scale) / den;
  const BigInt remainder = (num * scale) % den;
  if (mode == Rounding::Nearest && remainder * 2 >= den) {
    ++mantissa;
    if (mantissa == scale * 10) {
      mantissa = scale;
      ++exponent;
    }
  }
  return {mantissa.str(), exponent};
}

BigInt gl_order(std::size_t n, std::uint64_t p) {
  if (n == 0) throw RangeError("dimension must be >= 1");
  BigInt pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;
  BigInt order = 1;
  BigInt pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

Probability retrieval_probability(std::size_t n, std::uint64_t p) {
  BigRational exact(BigInt(1), gl_order(n, p));
  auto decimal = to_scientific(exact, 5).to_string();
  return {std::move(exact), std::move(decimal)};
}

std::vector<KeyspaceReport> build_tables(const std::vector<std::uint64_t>& primes,
                                         const std::vector<std::size_t>& dims) {
  for (const auto p : primes) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  }
  auto sorted_primes = primes;
  std::sort(sorted_primes.begin(), sorted_primes.end());
  auto sorted_dims = dims;
  std::sort(sorted_dims.begin(), sorted_dims.end());

  std::vector<KeyspaceReport> reports;
  for (const auto p : sorted_primes) {
    for (const auto n : sorted_dims) {
      auto order = gl_order(n, p);
      auto prob = retrieval_probability(n, p);
      auto order_decimal = to_scientific(BigRational(order), 5).to_string();
      reports.push_back({p, n, std::move(order), std::move(prob.exact), std::move(order_decimal),
                         std::move(prob.decimal)});
    }
  }
  return reports;
}

std::vector<std::uint64_t> paper_table_primes() { return {29, 31, 37, 41, 43, 47, 53, 59, 61, 67}; }

}  // namespace fibecc
