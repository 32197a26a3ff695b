#ifndef RPSETS_EXACT_MATH_HPP
#define RPSETS_EXACT_MATH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rpsets/errors.hpp"

namespace rpsets {

/// Arbitrary-precision integer used for every count, power and binomial.
/// Counts are nonnegative; signed values only appear as intermediate sums
/// and as bound gaps.
using ExactInt = boost::multiprecision::cpp_int;

/// Exact 2^e.
inline ExactInt pow2(std::int64_t e) {
  if (e < 0) {
    throw DomainError("pow2: exponent must be nonnegative, got " + std::to_string(e));
  }
  ExactInt r = 1;
  r <<= static_cast<std::size_t>(e);
  return r;
}

/// Exact C(n, k). Zero when k > n or n < 0.
///
/// Uses the running product prod_{i=1..k} (n-k+i)/i; every partial product is
/// itself a binomial coefficient, so each division is exact.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) {
    throw DomainError("binomial: k must be nonnegative, got " + std::to_string(k));
  }
  if (n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  ExactInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= static_cast<std::uint64_t>(n - k + i);
    r /= static_cast<std::uint64_t>(i);
  }
  return r;
}

/// Memo of C(N, k) for one fixed k and growing N, extended with
/// C(N, k) = C(N-1, k) * N / (N - k). Reusable across evaluations that share k.
class BinomialColumn {
public:
  explicit BinomialColumn(std::int64_t k) : k_(k) {
    if (k < 0) {
      throw DomainError("BinomialColumn: k must be nonnegative, got " + std::to_string(k));
    }
    values_.emplace_back(1);  // C(k, k)
  }

  std::int64_t k() const noexcept { return k_; }

  const ExactInt& operator()(std::int64_t n) {
    if (n < k_) return zero_;
    const auto idx = static_cast<std::size_t>(n - k_);
    while (values_.size() <= idx) {
      const std::int64_t next = k_ + static_cast<std::int64_t>(values_.size());
      ExactInt v = values_.back() * static_cast<std::uint64_t>(next);
      v /= static_cast<std::uint64_t>(next - k_);
      values_.push_back(std::move(v));
    }
    return values_[idx];
  }

private:
  std::int64_t k_;
  std::vector<ExactInt> values_;  // values_[i] = C(k + i, k)
  ExactInt zero_ = 0;
};

/// floor(x / d) for nonnegative x.
inline std::uint64_t floor_quot(std::uint64_t x, std::uint64_t d) {
  if (d == 0) throw DomainError("floor_quot: divisor must be positive");
  return x / d;
}

/// Number of bits in |x|; 0 for x = 0.
inline std::size_t bit_length(const ExactInt& x) {
  if (x == 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(abs(x))) + 1;
}

inline std::string to_decimal(const ExactInt& x) { return x.str(); }

/// Parses an optionally negative decimal integer. Rejects anything else,
/// including empty input, whitespace and leading '+'.
inline ExactInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("parse_decimal: not a decimal integer: '" + std::string(text) + "'");
  }
  return ExactInt(std::string(text));
}

}  // namespace rpsets

#endif  // RPSETS_EXACT_MATH_HPP
