#ifndef RPSETS_ORACLE_HPP
#define RPSETS_ORACLE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "rpsets/counting.hpp"
#include "rpsets/errors.hpp"
#include "rpsets/exact_math.hpp"

// Brute-force ground truth. Nothing in here uses the Moebius function or the
// closed forms: subsets of {m+1..n} are walked element by element and their
// gcd is taken directly.

namespace rpsets {

inline constexpr std::uint32_t kOracleHardCap = 30;

struct OracleConfig {
  /// Largest interval length n - m the oracle will enumerate.
  std::uint32_t max_width = 24;
};

namespace detail {

inline void check_oracle_width(std::uint64_t m, std::uint64_t n, const OracleConfig& config) {
  if (config.max_width > kOracleHardCap) {
    throw CapacityError("oracle width cap " + std::to_string(config.max_width) +
                        " exceeds the hard cap " + std::to_string(kOracleHardCap));
  }
  if (n - m > config.max_width) {
    throw CapacityError("oracle refuses interval of width " + std::to_string(n - m) +
                        ": width cap is " + std::to_string(config.max_width));
  }
}

/// Pascal's triangle up to row kOracleHardCap in machine integers.
inline const auto& small_binomials() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kOracleHardCap + 1>, kOracleHardCap + 1> c{};
    for (std::size_t r = 0; r <= kOracleHardCap; ++r) {
      c[r][0] = 1;
      for (std::size_t j = 1; j <= r; ++j) c[r][j] = c[r - 1][j - 1] + c[r - 1][j];
    }
    return c;
  }();
  return table;
}

// Every nonempty subset is visited as an increasing sequence of offsets.
// Once a prefix satisfies the coprimality test, so does every extension by
// larger elements (adding elements only shrinks the gcd to a divisor), and
// those extensions are counted in one step.
class SubsetWalker {
public:
  SubsetWalker(std::uint64_t m, std::uint64_t n, Family family, std::uint64_t k)
      : first_(m + 1), width_(n - m), n_(n), family_(family), k_(k) {}

  std::uint64_t run() {
    walk(0, 0, 0);
    return count_;
  }

private:
  bool accepted(std::uint64_t g) const {
    return coprime_to_n(family_) ? std::gcd(g, n_) == 1 : g == 1;
  }

  void walk(std::uint64_t start, std::uint64_t g, std::uint64_t size) {
    for (std::uint64_t i = start; i < width_; ++i) {
      const std::uint64_t g2 = std::gcd(g, first_ + i);
      const std::uint64_t size2 = size + 1;
      const std::uint64_t rest = width_ - 1 - i;
      if (accepted(g2)) {
        if (!takes_k(family_)) {
          count_ += std::uint64_t{1} << rest;
        } else if (k_ - size2 <= rest) {
          count_ += small_binomials()[rest][k_ - size2];
        }
      } else if (!takes_k(family_) || size2 < k_) {
        walk(i + 1, g2, size2);
      }
    }
  }

  std::uint64_t first_;
  std::uint64_t width_;
  std::uint64_t n_;
  Family family_;
  std::uint64_t k_;
  std::uint64_t count_ = 0;
};

}  // namespace detail

/// Direct count of the subsets described by `query`.
inline ExactInt oracle_count(const CountQuery& query, const OracleConfig& config = {}) {
  validate(query);
  detail::check_oracle_width(query.m, query.n, config);
  const std::uint64_t k = query.k.value_or(0);
  if (takes_k(query.family) && k > query.n - query.m) return 0;
  return ExactInt(detail::SubsetWalker(query.m, query.n, query.family, k).run());
}

/// For each d, the number of nonempty subsets of {m+1..n} with gcd exactly d.
/// Only classes with a nonzero count appear.
inline std::map<std::uint64_t, ExactInt> oracle_gcd_class_counts(std::uint64_t m, std::uint64_t n,
                                                                  const OracleConfig& config = {}) {
  if (m >= n) {
    throw DomainError("m < n required (got m = " + std::to_string(m) +
                      ", n = " + std::to_string(n) + ")");
  }
  detail::check_oracle_width(m, n, config);
  std::map<std::uint64_t, std::uint64_t> counts;
  const std::uint64_t width = n - m;
  auto walk = [&](auto&& self, std::uint64_t start, std::uint64_t g) -> void {
    for (std::uint64_t i = start; i < width; ++i) {
      const std::uint64_t g2 = std::gcd(g, m + 1 + i);
      if (g2 == 1) {
        counts[1] += std::uint64_t{1} << (width - 1 - i);
      } else {
        ++counts[g2];
        self(self, i + 1, g2);
      }
    }
  };
  walk(walk, 0, 0);
  std::map<std::uint64_t, ExactInt> out;
  for (const auto& [d, c] : counts) out.emplace(d, ExactInt(c));
  return out;
}

}  // namespace rpsets

#endif  // RPSETS_ORACLE_HPP
