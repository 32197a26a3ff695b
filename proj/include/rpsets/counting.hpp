#ifndef RPSETS_COUNTING_HPP
#define RPSETS_COUNTING_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "rpsets/errors.hpp"
#include "rpsets/exact_math.hpp"
#include "rpsets/sieve.hpp"

namespace rpsets {

// Throughout, the interval is {m+1, ..., n} with 0 <= m < n and every count
// is over nonempty subsets.
//
//   F     relatively prime subsets
//   FK    relatively prime subsets of cardinality k
//   PHI   subsets whose gcd is coprime to n
//   PHIK  subsets of cardinality k whose gcd is coprime to n

enum class Family { F, FK, PHI, PHIK };

inline constexpr Family kAllFamilies[] = {Family::F, Family::FK, Family::PHI, Family::PHIK};

inline constexpr bool takes_k(Family f) noexcept { return f == Family::FK || f == Family::PHIK; }
inline constexpr bool coprime_to_n(Family f) noexcept {
  return f == Family::PHI || f == Family::PHIK;
}

inline std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::F: return "F";
    case Family::FK: return "FK";
    case Family::PHI: return "PHI";
    case Family::PHIK: return "PHIK";
  }
  return "?";
}

/// Case-insensitive: "f", "fk", "phi", "phik".
inline Family parse_family(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const Family f : kAllFamilies) {
    if (upper == to_string(f)) return f;
  }
  throw DomainError("unknown family '" + std::string(text) + "' (expected f, fk, phi or phik)");
}

struct CountQuery {
  Family family = Family::F;
  std::uint64_t m = 0;
  std::uint64_t n = 1;
  std::optional<std::uint64_t> k;

  friend bool operator==(const CountQuery&, const CountQuery&) = default;
};

inline void validate(const CountQuery& q) {
  if (q.m >= q.n) {
    throw DomainError("m < n required (got m = " + std::to_string(q.m) +
                      ", n = " + std::to_string(q.n) + ")");
  }
  if (takes_k(q.family)) {
    if (!q.k) throw DomainError("k required for family " + std::string(to_string(q.family)));
    if (*q.k < 1) throw DomainError("k >= 1 required");
  } else if (q.k) {
    throw DomainError("k not accepted for family " + std::string(to_string(q.family)));
  }
}

/// Evaluation knobs for the sums over d = 1..n. Every combination returns
/// the same value.
struct SumOptions {
  /// Skip d with floor(n/d) == floor(m/d); such terms are zero.
  bool prune_zero_terms = true;
  /// Walk d in maximal blocks on which floor(n/d) and floor(m/d) are both
  /// constant, weighting each block by a Mertens-function difference.
  bool divisor_blocks = false;
};

namespace detail {

inline void check_interval(std::uint64_t m, std::uint64_t n, const SieveTable& table) {
  if (m >= n) {
    throw DomainError("m < n required (got m = " + std::to_string(m) +
                      ", n = " + std::to_string(n) + ")");
  }
  if (n > table.limit()) {
    throw OutOfRangeError("n = " + std::to_string(n) + " exceeds sieve limit " +
                          std::to_string(table.limit()));
  }
}

inline void check_k(std::uint64_t k) {
  if (k < 1) throw DomainError("k >= 1 required");
}

inline ExactInt checked_count(ExactInt value, std::string_view what) {
  if (value < 0) {
    throw InternalError(std::string(what) + " evaluated to a negative count " + value.str());
  }
  return value;
}

/// Collects sum_{d=1..n} mu(d) * [floor(n/d) - floor(m/d) = w] into a map
/// keyed by the width w, so each distinct width is expanded once.
inline std::map<std::uint64_t, std::int64_t> width_weights(std::uint64_t m, std::uint64_t n,
                                                           const SieveTable& table,
                                                           const SumOptions& opt) {
  std::map<std::uint64_t, std::int64_t> weights;
  if (opt.divisor_blocks) {
    const auto mertens = table.mertens_values();
    for (std::uint64_t lo = 1; lo <= n;) {
      const std::uint64_t qn = n / lo;
      const std::uint64_t qm = m / lo;
      std::uint64_t hi = n / qn;
      if (qm > 0) hi = std::min(hi, m / qm);
      const std::int64_t mu_sum = std::int64_t{mertens[hi]} - mertens[lo - 1];
      if (mu_sum != 0 && !(opt.prune_zero_terms && qn == qm)) weights[qn - qm] += mu_sum;
      lo = hi + 1;
    }
  } else {
    const auto mobius = table.mobius_values();
    for (std::uint64_t d = 1; d <= n; ++d) {
      const int mu = mobius[d];
      if (mu == 0) continue;
      const std::uint64_t w = n / d - m / d;
      if (opt.prune_zero_terms && w == 0) continue;
      weights[w] += mu;
    }
  }
  return weights;
}

}  // namespace detail

/// f(m, n) = sum_{d=1..n} mu(d) (2^(floor(n/d) - floor(m/d)) - 1).
inline ExactInt f_interval(std::uint64_t m, std::uint64_t n, const SieveTable& table,
                           const SumOptions& opt = {}) {
  detail::check_interval(m, n, table);
  ExactInt total = 0;
  for (const auto& [width, weight] : detail::width_weights(m, n, table, opt)) {
    if (weight != 0) total += ExactInt(weight) * (pow2(static_cast<std::int64_t>(width)) - 1);
  }
  return detail::checked_count(std::move(total), "f(m, n)");
}

/// f_k(m, n) = sum_{d=1..n} mu(d) C(floor(n/d) - floor(m/d), k).
///
/// `column`, when given, must be for the same k; it is extended in place and
/// can be shared across calls.
inline ExactInt fk_interval(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                            const SieveTable& table, const SumOptions& opt = {},
                            BinomialColumn* column = nullptr) {
  detail::check_interval(m, n, table);
  detail::check_k(k);
  if (k > n - m) return 0;
  std::optional<BinomialColumn> local;
  if (column == nullptr) column = &local.emplace(static_cast<std::int64_t>(k));
  if (column->k() != static_cast<std::int64_t>(k)) {
    throw DomainError("fk_interval: binomial column is for a different k");
  }
  ExactInt total = 0;
  for (const auto& [width, weight] : detail::width_weights(m, n, table, opt)) {
    if (weight != 0 && width >= k) {
      total += ExactInt(weight) * (*column)(static_cast<std::int64_t>(width));
    }
  }
  return detail::checked_count(std::move(total), "f_k(m, n)");
}

/// sum_{d | n} mu(d) 2^(n/d - floor(m/d)), for any n >= 1. For n >= 2 this is
/// Phi(m, n). At n = 1 the sum is 2: the empty set is coprime to 1 and is
/// not cancelled there, so phi_interval does not use it.
inline ExactInt phi_closed_form(std::uint64_t m, std::uint64_t n, const SieveTable& table) {
  detail::check_interval(m, n, table);
  ExactInt total = 0;
  for (const std::uint64_t d : divisors(n, table)) {
    const int mu = table.mobius(d);
    if (mu == 0) continue;
    const auto e = static_cast<std::int64_t>(n / d - m / d);
    if (mu > 0) {
      total += pow2(e);
    } else {
      total -= pow2(e);
    }
  }
  return total;
}

/// Phi(m, n): nonempty subsets of {m+1..n} whose gcd is coprime to n.
/// Phi(0, 1) = 1 (the set {1}).
inline ExactInt phi_interval(std::uint64_t m, std::uint64_t n, const SieveTable& table) {
  detail::check_interval(m, n, table);
  if (n == 1) return 1;
  return detail::checked_count(phi_closed_form(m, n, table), "Phi(m, n)");
}

/// Phi_k(m, n) = sum_{d | n} mu(d) C(n/d - floor(m/d), k). Since k >= 1 the
/// empty set never contributes, so the sum is also right at n = 1.
inline ExactInt phik_interval(std::uint64_t m, std::uint64_t n, std::uint64_t k,
                              const SieveTable& table, BinomialColumn* column = nullptr) {
  detail::check_interval(m, n, table);
  detail::check_k(k);
  if (k > n - m) return 0;
  std::optional<BinomialColumn> local;
  if (column == nullptr) column = &local.emplace(static_cast<std::int64_t>(k));
  if (column->k() != static_cast<std::int64_t>(k)) {
    throw DomainError("phik_interval: binomial column is for a different k");
  }
  ExactInt total = 0;
  for (const std::uint64_t d : divisors(n, table)) {
    const int mu = table.mobius(d);
    if (mu == 0) continue;
    const auto width = static_cast<std::int64_t>(n / d - m / d);
    if (mu > 0) {
      total += (*column)(width);
    } else {
      total -= (*column)(width);
    }
  }
  return detail::checked_count(std::move(total), "Phi_k(m, n)");
}

// Specializations to the full interval {1..n}.

inline ExactInt nathanson_f(std::uint64_t n, const SieveTable& table) {
  return f_interval(0, n, table);
}

inline ExactInt nathanson_fk(std::uint64_t n, std::uint64_t k, const SieveTable& table) {
  return fk_interval(0, n, k, table);
}

inline ExactInt nathanson_phi(std::uint64_t n, const SieveTable& table) {
  return phi_interval(0, n, table);
}

inline ExactInt nathanson_phik(std::uint64_t n, std::uint64_t k, const SieveTable& table) {
  return phik_interval(0, n, k, table);
}

/// Euler's phi(n) recovered as Phi_1(0, n).
inline ExactInt euler_phi_via_phik(std::uint64_t n, const SieveTable& table) {
  if (n < 2) throw DomainError("euler_phi_via_phik: n >= 2 required");
  return phik_interval(0, n, 1, table);
}

inline ExactInt evaluate(const CountQuery& q, const SieveTable& table) {
  validate(q);
  switch (q.family) {
    case Family::F: return f_interval(q.m, q.n, table);
    case Family::FK: return fk_interval(q.m, q.n, *q.k, table);
    case Family::PHI: return phi_interval(q.m, q.n, table);
    case Family::PHIK: return phik_interval(q.m, q.n, *q.k, table);
  }
  throw InternalError("evaluate: unhandled family");
}

}  // namespace rpsets

#endif  // RPSETS_COUNTING_HPP
