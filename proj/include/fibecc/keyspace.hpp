#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibecc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class Rounding { Nearest, Truncate };

/// Positive rational written as mantissa digits d.ddd x 10^exponent,
/// obtained by exact integer digit extraction.
struct Scientific {
  std::string digits;  // significant digits, no decimal point
  int exponent = 0;

  /// "1.0948e+15"
  std::string to_string() const;
};

/// Throws RangeError for non-positive values or zero digits.
Scientific to_scientific(const BigRational& value, std::size_t significant,
                         Rounding mode = Rounding::Nearest);

/// |GL_n(F_p)| = prod_{i=0}^{n-1} (p^n - p^i).
BigInt gl_order(std::size_t n, std::uint64_t p);

struct Probability {
  BigRational exact;
  std::string decimal;  // 5 significant digits
};

/// 1 / |GL_n(F_p)|.
Probability retrieval_probability(std::size_t n, std::uint64_t p);

struct KeyspaceReport {
  std::uint64_t p;
  std::size_t n;
  BigInt gl_order;
  BigRational probability;
  std::string gl_order_decimal;    // 5 significant digits
  std::string probability_decimal; // 5 significant digits
};

/// Reports for every (p, n) pair, ordered by p then n. Throws NotPrime.
std::vector<KeyspaceReport> build_tables(const std::vector<std::uint64_t>& primes,
                                         const std::vector<std::size_t>& dims);

/// The primes used in the published tables: 29, 31, 37, ..., 67.
std::vector<std::uint64_t> paper_table_primes();

}  // namespace fibecc
