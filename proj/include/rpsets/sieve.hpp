#ifndef RPSETS_SIEVE_HPP
#define RPSETS_SIEVE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "rpsets/errors.hpp"

namespace rpsets {

/// Largest sieve limit allowed unless a caller passes its own cap.
inline constexpr std::uint64_t kDefaultSieveCap = 10'000'000;

/// Moebius function, smallest prime factor, Euler totient and Mertens prefix
/// sums for 1..limit. Immutable once built.
class SieveTable {
public:
  /// Linear sieve: every composite is crossed out exactly once, by its
  /// smallest prime factor.
  static SieveTable build(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap) {
    if (limit < 1) throw DomainError("build_sieve: limit must be at least 1");
    if (limit > cap) {
      throw CapacityError("build_sieve: limit " + std::to_string(limit) +
                          " exceeds the configured cap " + std::to_string(cap));
    }
    SieveTable t;
    const auto n = static_cast<std::size_t>(limit);
    t.limit_ = limit;
    t.mobius_.assign(n + 1, 0);
    t.spf_.assign(n + 1, 0);
    t.totient_.assign(n + 1, 0);
    t.mertens_.assign(n + 1, 0);
    t.mobius_[1] = 1;
    t.totient_[1] = 1;

    for (std::size_t i = 2; i <= n; ++i) {
      if (t.spf_[i] == 0) {
        t.spf_[i] = static_cast<std::uint32_t>(i);
        t.mobius_[i] = -1;
        t.totient_[i] = static_cast<std::uint32_t>(i - 1);
        t.primes_.push_back(static_cast<std::uint32_t>(i));
      }
      for (const std::uint32_t p : t.primes_) {
        if (p > t.spf_[i] || i * p > n) break;
        const std::size_t j = i * p;
        t.spf_[j] = p;
        if (p == t.spf_[i]) {
          t.mobius_[j] = 0;
          t.totient_[j] = t.totient_[i] * p;
        } else {
          t.mobius_[j] = static_cast<std::int8_t>(-t.mobius_[i]);
          t.totient_[j] = t.totient_[i] * (p - 1);
        }
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      t.mertens_[i] = t.mertens_[i - 1] + t.mobius_[i];
    }
    return t;
  }

  std::uint64_t limit() const noexcept { return limit_; }

  int mobius(std::uint64_t d) const { return mobius_[check(d, 1)]; }
  std::uint32_t spf(std::uint64_t d) const { return spf_[check(d, 2)]; }
  std::uint32_t totient(std::uint64_t d) const { return totient_[check(d, 1)]; }
  /// Sum of mobius(1..d); mertens(0) = 0.
  std::int32_t mertens(std::uint64_t d) const { return mertens_[check(d, 0)]; }

  /// Unchecked views, indexed directly by d (slot 0 is padding).
  std::span<const std::int8_t> mobius_values() const noexcept { return mobius_; }
  std::span<const std::int32_t> mertens_values() const noexcept { return mertens_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

private:
  SieveTable() = default;

  std::size_t check(std::uint64_t d, std::uint64_t lo) const {
    if (d < lo || d > limit_) {
      throw OutOfRangeError("sieve index " + std::to_string(d) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(limit_) + "]");
    }
    return static_cast<std::size_t>(d);
  }

  std::uint64_t limit_ = 0;
  std::vector<std::int8_t> mobius_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> totient_;
  std::vector<std::int32_t> mertens_;
  std::vector<std::uint32_t> primes_;
};

inline SieveTable build_sieve(std::uint64_t limit, std::uint64_t cap = kDefaultSieveCap) {
  return SieveTable::build(limit, cap);
}

/// Distinct prime factors of n in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n, const SieveTable& table) {
  if (n < 1) throw DomainError("prime_factors: n must be positive");
  if (n > table.limit()) {
    throw OutOfRangeError("prime_factors: n = " + std::to_string(n) + " exceeds sieve limit " +
                          std::to_string(table.limit()));
  }
  std::vector<std::uint64_t> out;
  while (n > 1) {
    const std::uint64_t p = table.spf(n);
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

/// All divisors of n, strictly increasing.
inline std::vector<std::uint64_t> divisors(std::uint64_t n, const SieveTable& table) {
  if (n < 1) throw DomainError("divisors: n must be positive");
  if (n > table.limit()) {
    throw OutOfRangeError("divisors: n = " + std::to_string(n) + " exceeds sieve limit " +
                          std::to_string(table.limit()));
  }
  std::vector<std::uint64_t> out{1};
  while (n > 1) {
    const std::uint64_t p = table.spf(n);
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The smallest prime p* dividing n.
inline std::uint64_t smallest_prime_divisor(std::uint64_t n, const SieveTable& table) {
  if (n < 2) {
    throw DomainError("smallest_prime_divisor: n >= 2 required, got " + std::to_string(n));
  }
  if (n > table.limit()) {
    throw OutOfRangeError("smallest_prime_divisor: n = " + std::to_string(n) +
                          " exceeds sieve limit " + std::to_string(table.limit()));
  }
  return table.spf(n);
}

/// Process-wide read-only table covering at least `limit`. A request above
/// the current limit rebuilds and replaces the shared table; earlier handles
/// stay valid.
inline std::shared_ptr<const SieveTable> shared_sieve(std::uint64_t limit,
                                                      std::uint64_t cap = kDefaultSieveCap) {
  static std::mutex mutex;
  static std::shared_ptr<const SieveTable> current;
  std::lock_guard lock(mutex);
  if (!current || current->limit() < limit) {
    current = std::make_shared<const SieveTable>(SieveTable::build(limit, cap));
  }
  return current;
}

}  // namespace rpsets

#endif  // RPSETS_SIEVE_HPP
