#ifndef RPSETS_BOUNDS_HPP
#define RPSETS_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "rpsets/counting.hpp"
#include "rpsets/exact_math.hpp"
#include "rpsets/sieve.hpp"

// Exact checks of the two-sided estimates
//
//   0 <= main - correction - count <= upper
//
// for each family, plus the partition of all subsets by their exact gcd.

namespace rpsets {

enum class Theorem { T1, T2, T3, T4 };

inline std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
  }
  return "?";
}

/// The family a bound is about.
inline Family family_of(Theorem t) noexcept {
  switch (t) {
    case Theorem::T1: return Family::F;
    case Theorem::T2: return Family::FK;
    case Theorem::T3: return Family::PHI;
    case Theorem::T4: return Family::PHIK;
  }
  return Family::F;
}

struct BoundReport {
  Theorem theorem = Theorem::T1;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  ExactInt gap;    // main term - correction term - exact count; signed
  ExactInt upper;  // proven upper bound for gap
  bool holds_lower = false;
  bool holds_upper = false;
  /// T2 only: whether gap <= n * C(floor((n-m)/3), k) as well. Recorded,
  /// never required.
  std::optional<bool> holds_proof_line;

  bool holds() const noexcept { return holds_lower && holds_upper; }
};

namespace detail {

inline BoundReport make_report(Theorem t, std::uint64_t m, std::uint64_t n,
                               std::optional<std::uint64_t> k, ExactInt gap, ExactInt upper) {
  BoundReport r;
  r.theorem = t;
  r.m = m;
  r.n = n;
  r.k = k;
  r.holds_lower = gap >= 0;
  r.holds_upper = gap <= upper;
  r.gap = std::move(gap);
  r.upper = std::move(upper);
  return r;
}

inline std::int64_t as_signed(std::uint64_t v) { return static_cast<std::int64_t>(v); }

inline BinomialColumn& column_for(std::uint64_t k, BinomialColumn* given,
                                  std::optional<BinomialColumn>& local) {
  if (given != nullptr && given->k() == as_signed(k)) return *given;
  return local.emplace(as_signed(k));
}

}  // namespace detail

/// gap = 2^(n-m) - 2^(floor(n/2) - floor(m/2)) - f(m,n),  upper = 2n 2^floor((n-m)/3).
inline BoundReport check_f(std::uint64_t m, std::uint64_t n, const SieveTable& table) {
  const ExactInt count = f_interval(m, n, table);
  ExactInt gap = pow2(detail::as_signed(n - m)) - pow2(detail::as_signed(n / 2 - m / 2)) - count;
  ExactInt upper = ExactInt(2 * n) * pow2(detail::as_signed((n - m) / 3));
  return detail::make_report(Theorem::T1, m, n, std::nullopt, std::move(gap), std::move(upper));
}

/// gap = C(n-m,k) - C(floor(n/2) - floor(m/2), k) - f_k(m,n),
/// upper = n C(floor((n-m)/3) + 2, k).
inline BoundReport check_fk(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                            const SieveTable& table, BinomialColumn* column = nullptr) {
  std::optional<BinomialColumn> local;
  detail::check_interval(m, n, table);
  detail::check_k(k);
  BinomialColumn& c = detail::column_for(k, column, local);
  const ExactInt count = fk_interval(m, n, k, table, {}, &c);
  ExactInt gap = c(detail::as_signed(n - m)) - c(detail::as_signed(n / 2 - m / 2)) - count;
  ExactInt upper = ExactInt(n) * c(detail::as_signed((n - m) / 3 + 2));
  const bool proof_line = gap <= ExactInt(n) * c(detail::as_signed((n - m) / 3));
  BoundReport r =
      detail::make_report(Theorem::T2, m, n, k, std::move(gap), std::move(upper));
  r.holds_proof_line = proof_line;
  return r;
}

/// With p = smallest prime divisor of n:
/// gap = 2^(n-m) - 2^(n/p - floor(m/p)) - Phi(m,n),  upper = 2n 2^floor((n-m)/(p+1)).
inline BoundReport check_phi(std::uint64_t m, std::uint64_t n, const SieveTable& table) {
  detail::check_interval(m, n, table);
  const std::uint64_t p = smallest_prime_divisor(n, table);
  const ExactInt count = phi_interval(m, n, table);
  ExactInt gap = pow2(detail::as_signed(n - m)) - pow2(detail::as_signed(n / p - m / p)) - count;
  ExactInt upper = ExactInt(2 * n) * pow2(detail::as_signed((n - m) / (p + 1)));
  return detail::make_report(Theorem::T3, m, n, std::nullopt, std::move(gap), std::move(upper));
}

/// gap = C(n-m,k) - C(n/p - floor(m/p), k) - Phi_k(m,n),
/// upper = n C(floor((n-m)/(p+1)) + 1, k).
inline BoundReport check_phik(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                              const SieveTable& table, BinomialColumn* column = nullptr) {
  std::optional<BinomialColumn> local;
  detail::check_interval(m, n, table);
  detail::check_k(k);
  const std::uint64_t p = smallest_prime_divisor(n, table);
  BinomialColumn& c = detail::column_for(k, column, local);
  const ExactInt count = phik_interval(m, n, k, table, &c);
  ExactInt gap = c(detail::as_signed(n - m)) - c(detail::as_signed(n / p - m / p)) - count;
  ExactInt upper = ExactInt(n) * c(detail::as_signed((n - m) / (p + 1) + 1));
  return detail::make_report(Theorem::T4, m, n, k, std::move(gap), std::move(upper));
}

/// Both sides of a partition identity: `total` counts every subset directly,
/// `by_gcd` sums the per-gcd classes.
struct PartitionSides {
  ExactInt total;
  ExactInt by_gcd;

  bool equal() const { return total == by_gcd; }
};

/// 2^(n-m) - 1 against the sum over d with floor(n/d) > floor(m/d) of
/// f(floor(m/d), floor(n/d)). Dividing a subset with gcd d by d gives a
/// relatively prime subset of {floor(m/d)+1 .. floor(n/d)}, and back.
inline PartitionSides partition_sides_f(std::uint64_t m, std::uint64_t n,
                                        const SieveTable& table) {
  detail::check_interval(m, n, table);
  PartitionSides s{pow2(detail::as_signed(n - m)) - 1, 0};
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n / d > m / d) s.by_gcd += f_interval(m / d, n / d, table);
  }
  return s;
}

/// C(n-m, k) against the sum over d of f_k(floor(m/d), floor(n/d)).
inline PartitionSides partition_sides_fk(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                                         const SieveTable& table,
                                         BinomialColumn* column = nullptr) {
  std::optional<BinomialColumn> local;
  detail::check_interval(m, n, table);
  detail::check_k(k);
  BinomialColumn& c = detail::column_for(k, column, local);
  PartitionSides s{c(detail::as_signed(n - m)), 0};
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n / d > m / d) s.by_gcd += fk_interval(m / d, n / d, k, table, {}, &c);
  }
  return s;
}

inline bool partition_identity_f(std::uint64_t m, std::uint64_t n, const SieveTable& table) {
  return partition_sides_f(m, n, table).equal();
}

inline bool partition_identity_fk(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                                  const SieveTable& table, BinomialColumn* column = nullptr) {
  return partition_sides_fk(m, n, k, table, column).equal();
}

}  // namespace rpsets

#endif  // RPSETS_BOUNDS_HPP
