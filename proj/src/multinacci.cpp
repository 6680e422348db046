#include "fibecc/multinacci.hpp"

#include <deque>
#include <string>

#include "fibecc/errors.hpp"
#include "fibecc/finite_field.hpp"
#include "text_util.hpp"

namespace fibecc {
namespace {

// Sliding window of n consecutive terms t_start .. t_{start+n-1} with their
// running sum, stepped one index at a time in either direction.
class TermWindow {
 public:
  explicit TermWindow(const MultinacciParams& params)
      : m_(params.m()), terms_(params.n(), 0), sum_(1 % params.m()) {
    terms_.back() = 1 % m_;
  }

  std::int64_t start() const noexcept { return start_; }
  std::uint64_t front() const { return terms_.front(); }
  std::uint64_t back() const { return terms_.back(); }

  void step_up() {
    // t_{start+n} = sum of the window.
    const auto next = sum_;
    sum_ = sub_mod(add_mod(sum_, next, m_), terms_.front(), m_);
    terms_.pop_front();
    terms_.push_back(next);
    ++start_;
  }

  void step_down() {
    // t_{start-1} = t_{start+n-1} - (t_start + ... + t_{start+n-2}).
    const auto last = terms_.back();
    const auto prev = sub_mod(last, sub_mod(sum_, last, m_), m_);
    sum_ = add_mod(sub_mod(sum_, last, m_), prev, m_);
    terms_.pop_back();
    terms_.push_front(prev);
    --start_;
  }

  void seek(std::int64_t target) {
    while (start_ < target) step_up();
    while (start_ > target) step_down();
  }

 private:
  std::uint64_t m_;
  std::deque<std::uint64_t> terms_;
  std::uint64_t sum_;
  std::int64_t start_ = 0;
};

}  // namespace

MultinacciParams::MultinacciParams(std::size_t n, std::uint64_t m) : n_(n), m_(m) {
  if (n < 2) throw RangeError("multinacci order n must be >= 2, got " + std::to_string(n));
  if (m < 2) throw RangeError("modulus m must be >= 2, got " + std::to_string(m));
}

std::uint64_t term(const MultinacciParams& params, std::int64_t k) {
  TermWindow window(params);
  window.seek(k);
  return window.front();
}

std::vector<std::uint64_t> term_range(const MultinacciParams& params, std::int64_t first,
                                      std::int64_t last) {
  if (last < first) return {};
  TermWindow window(params);
  window.seek(first);
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  out.push_back(window.front());
  for (std::int64_t i = first + 1; i <= last; ++i) {
    window.step_up();
    out.push_back(window.front());
  }
  return out;
}

MultinacciMatrix power_matrix(const MultinacciParams& params, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(params.n());
  const auto m = params.m();
  const std::int64_t lo = k - n + 1;
  const auto terms = term_range(params, lo, k + n - 1);
  const auto t = [&](std::int64_t idx) { return terms[static_cast<std::size_t>(idx - lo)]; };

  IntMatrix entries(params.n(), params.n());
  for (std::int64_t i = 0; i < n; ++i) {
    entries(i, 0) = t(k + n - 1 - i);
    // Column j sums a run that shrinks by one term per column, so build the
    // columns right to left as prefix sums.
    std::uint64_t run = 0;
    for (std::int64_t j = n - 1; j >= 1; --j) {
      run = add_mod(run, t(k - 1 - i + j), m);
      entries(i, j) = run;
    }
  }
  return {params, k, std::move(entries)};
}

IntMatrix initial_matrix(std::size_t n) {
  IntMatrix f(n, n);
  for (std::size_t j = 0; j < n; ++j) f(0, j) = 1;
  for (std::size_t i = 1; i < n; ++i) f(i, i - 1) = 1;
  return f;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

int det_sign(std::size_t n, std::int64_t k) {
  // k(n-1) is odd iff k is odd and n is even.
  return (k % 2 != 0 && n % 2 == 0) ? -1 : 1;
}

IntMatrix mat_mul_mod(const IntMatrix& lhs, const IntMatrix& rhs, std::uint64_t m) {
  if (lhs.cols() != rhs.rows()) {
    throw DimensionMismatch(std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
                            " times " + std::to_string(rhs.rows()) + "x" +
                            std::to_string(rhs.cols()));
  }
  IntMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t l = 0; l < lhs.cols(); ++l) {
      const auto a = lhs(i, l) % m;
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        out(i, j) = add_mod(out(i, j), mul_mod(a, rhs(l, j) % m, m), m);
      }
    }
  }
  return out;
}

std::string format_matrix(const IntMatrix& matrix) {
  std::string out;
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    if (i != 0) out += ';';
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (j != 0) out += ',';
      out += std::to_string(matrix(i, j));
    }
  }
  return out;
}

IntMatrix parse_matrix(std::string_view text) {
  const auto rows = detail::split(detail::trim(text), ';');
  std::vector<std::uint64_t> data;
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto cells = detail::split(rows[i], ',');
    if (i == 0) cols = cells.size();
    if (cells.size() != cols) throw ParseError("ragged matrix '" + std::string(text) + "'");
    for (const auto cell : cells) data.push_back(detail::parse_int<std::uint64_t>(cell));
  }
  return {rows.size(), cols, std::move(data)};
}

}  // namespace fibecc
