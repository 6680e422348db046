#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibecc/matrix.hpp"

namespace fibecc {

using IntMatrix = Matrix<std::uint64_t>;

/// Order n of the sequence (also the matrix dimension) and the reduction
/// modulus m. Both must be at least 2; m need not be prime.
class MultinacciParams {
 public:
  MultinacciParams(std::size_t n, std::uint64_t m);

  std::size_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }

 private:
  std::size_t n_;
  std::uint64_t m_;
};

/// The k-th term mod m of the order-n sequence seeded t_0 = ... = t_{n-2} = 0,
/// t_{n-1} = 1. Negative k walks the recurrence backwards. O(|k|).
std::uint64_t term(const MultinacciParams& params, std::int64_t k);

/// Terms t_first, ..., t_last (inclusive) mod m.
std::vector<std::uint64_t> term_range(const MultinacciParams& params, std::int64_t first,
                                      std::int64_t last);

/// F_n^k reduced mod m, any sign of k.
class MultinacciMatrix {
 public:
  MultinacciMatrix(MultinacciParams params, std::int64_t k, IntMatrix entries)
      : params_(params), k_(k), entries_(std::move(entries)) {}

  const MultinacciParams& params() const noexcept { return params_; }
  std::int64_t k() const noexcept { return k_; }
  const IntMatrix& entries() const noexcept { return entries_; }

 private:
  MultinacciParams params_;
  std::int64_t k_;
  IntMatrix entries_;
};

/// Builds F_n^k entry by entry from the terms t_{k-n+1} .. t_{k+n-1}:
///
///   column 0:        entry(i, 0) = t_{k+n-1-i}
///   column j >= 1:   entry(i, j) = t_{k+n-2-i} + ... + t_{k-1-i+j}
///
/// so the last column is t_{k+n-2-i}. No matrix products or inversions are
/// performed; the inverse is power_matrix(params, -k).
MultinacciMatrix power_matrix(const MultinacciParams& params, std::int64_t k);

/// The initial matrix F_n: ones on the first row and the subdiagonal.
IntMatrix initial_matrix(std::size_t n);

IntMatrix identity_matrix(std::size_t n);

/// (-1)^(k(n-1)).
int det_sign(std::size_t n, std::int64_t k);

/// A * B with entries reduced mod m. Throws DimensionMismatch.
IntMatrix mat_mul_mod(const IntMatrix& lhs, const IntMatrix& rhs, std::uint64_t m);

// Text form: rows separated by ';', entries by ',' ("34,21;21,13").
std::string format_matrix(const IntMatrix& matrix);
IntMatrix parse_matrix(std::string_view text);

}  // namespace fibecc
