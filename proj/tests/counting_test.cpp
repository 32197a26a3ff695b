#include <cstdint>
#include <numeric>

#include <gtest/gtest.h>

#include "rpsets/counting.hpp"

namespace rpsets {
namespace {

const SieveTable& table() {
  static const SieveTable t = build_sieve(12000);
  return t;
}

// Plain bitmask enumeration over {m+1..n}; k = 0 means any nonempty size.
std::uint64_t brute(Family f, std::uint64_t m, std::uint64_t n, std::uint64_t k = 0) {
  const std::uint64_t w = n - m;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << w); ++mask) {
    if (k != 0 && static_cast<std::uint64_t>(__builtin_popcountll(mask)) != k) continue;
    std::uint64_t g = 0;
    for (std::uint64_t i = 0; i < w; ++i) {
      if (mask >> i & 1) g = std::gcd(g, m + 1 + i);
    }
    count += coprime_to_n(f) ? std::gcd(g, n) == 1 : g == 1;
  }
  return count;
}

// The pre-rearrangement double sums (divisor sums over i = 1..m), used only
// as a cross-check of the single sums.
ExactInt double_sum_f(std::uint64_t m, std::uint64_t n) {
  const auto& t = table();
  ExactInt total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) total += t.mobius(d) * (pow2(n / d) - 1);
  for (std::uint64_t i = 1; i <= m; ++i) {
    for (const auto d : divisors(i, t)) total -= t.mobius(d) * pow2(n / d - i / d);
  }
  return total;
}

ExactInt double_sum_fk(std::uint64_t m, std::uint64_t n, std::int64_t k) {
  const auto& t = table();
  ExactInt total = 0;
  for (std::uint64_t d = 1; d <= n; ++d) total += t.mobius(d) * binomial(n / d, k);
  for (std::uint64_t i = 1; i <= m; ++i) {
    for (const auto d : divisors(i, t)) {
      total -= t.mobius(d) * binomial(static_cast<std::int64_t>(n / d - i / d), k - 1);
    }
  }
  return total;
}

ExactInt double_sum_phi(std::uint64_t m, std::uint64_t n) {
  const auto& t = table();
  ExactInt total = 0;
  for (const auto d : divisors(n, t)) total += t.mobius(d) * pow2(n / d);
  for (std::uint64_t i = 1; i <= m; ++i) {
    for (const auto d : divisors(std::gcd(i, n), t)) total -= t.mobius(d) * pow2((n - i) / d);
  }
  return total;
}

ExactInt double_sum_phik(std::uint64_t m, std::uint64_t n, std::int64_t k) {
  const auto& t = table();
  ExactInt total = 0;
  for (const auto d : divisors(n, t)) total += t.mobius(d) * binomial(n / d, k);
  for (std::uint64_t i = 1; i <= m; ++i) {
    for (const auto d : divisors(std::gcd(i, n), t)) {
      total -= t.mobius(d) * binomial(static_cast<std::int64_t>((n - i) / d), k - 1);
    }
  }
  return total;
}

TEST(FIntervalTest, Examples) {
  EXPECT_EQ(f_interval(0, 1, table()), 1);
  EXPECT_EQ(f_interval(1, 2, table()), 0);
  EXPECT_EQ(f_interval(0, 3, table()), 5);
  EXPECT_EQ(f_interval(2, 6, table()), 9);
}

TEST(FIntervalTest, Errors) {
  EXPECT_THROW(f_interval(3, 3, table()), DomainError);
  EXPECT_THROW(f_interval(5, 3, table()), DomainError);
  EXPECT_THROW(f_interval(0, 13000, table()), OutOfRangeError);
}

TEST(FkIntervalTest, Examples) {
  EXPECT_EQ(fk_interval(0, 5, 1, table()), 1);
  EXPECT_EQ(fk_interval(0, 4, 2, table()), 5);
  EXPECT_EQ(fk_interval(2, 6, 5, table()), 0);
  EXPECT_THROW(fk_interval(0, 4, 0, table()), DomainError);
  EXPECT_THROW(fk_interval(4, 4, 1, table()), DomainError);
}

TEST(FkIntervalTest, RejectsColumnForOtherK) {
  BinomialColumn column(3);
  EXPECT_THROW(fk_interval(0, 10, 2, table(), {}, &column), DomainError);
  EXPECT_THROW(phik_interval(0, 10, 2, table(), &column), DomainError);
}

TEST(PhiIntervalTest, Examples) {
  EXPECT_EQ(phi_interval(0, 2, table()), 2);
  EXPECT_EQ(phi_interval(0, 3, table()), 6);
  EXPECT_EQ(phi_interval(2, 6, table()), 10);
  EXPECT_THROW(phi_interval(6, 6, table()), DomainError);
}

TEST(PhiIntervalTest, NEqualsOneIsDefinitional) {
  EXPECT_EQ(phi_interval(0, 1, table()), 1);
  EXPECT_EQ(phi_closed_form(0, 1, table()), 2);
  EXPECT_EQ(brute(Family::PHI, 0, 1), 1u);
}

TEST(PhikIntervalTest, Examples) {
  EXPECT_EQ(phik_interval(2, 6, 2, table()), 4);
  EXPECT_EQ(phik_interval(0, 6, 1, table()), 2);
  EXPECT_EQ(phik_interval(2, 6, 5, table()), 0);
  EXPECT_EQ(phik_interval(0, 1, 1, table()), 1);
  EXPECT_THROW(phik_interval(0, 6, 0, table()), DomainError);
}

TEST(SpecializationTest, FullInterval) {
  EXPECT_EQ(nathanson_f(1, table()), 1);
  EXPECT_EQ(nathanson_f(4, table()), 11);
  EXPECT_EQ(nathanson_f(6, table()), 53);
  EXPECT_EQ(euler_phi_via_phik(2, table()), 1);
  EXPECT_EQ(euler_phi_via_phik(6, table()), 2);
  EXPECT_EQ(euler_phi_via_phik(97, table()), 96);
  EXPECT_THROW(euler_phi_via_phik(1, table()), DomainError);
  for (std::uint64_t n = 1; n <= 14; ++n) {
    EXPECT_EQ(nathanson_phi(n, table()), brute(Family::PHI, 0, n));
    for (std::uint64_t k = 1; k <= n; ++k) {
      EXPECT_EQ(nathanson_fk(n, k, table()), brute(Family::FK, 0, n, k));
      EXPECT_EQ(nathanson_phik(n, k, table()), brute(Family::PHIK, 0, n, k));
    }
  }
}

TEST(CountingTest, MatchesBruteForce) {
  for (std::uint64_t n = 1; n <= 14; ++n) {
    for (std::uint64_t m = 0; m < n; ++m) {
      ASSERT_EQ(f_interval(m, n, table()), brute(Family::F, m, n)) << m << "," << n;
      ASSERT_EQ(phi_interval(m, n, table()), brute(Family::PHI, m, n)) << m << "," << n;
      for (std::uint64_t k = 1; k <= n - m + 1; ++k) {
        ASSERT_EQ(fk_interval(m, n, k, table()), brute(Family::FK, m, n, k));
        ASSERT_EQ(phik_interval(m, n, k, table()), brute(Family::PHIK, m, n, k));
      }
    }
  }
}

TEST(CountingTest, MatchesDoubleSums) {
  for (std::uint64_t n = 2; n <= 40; ++n) {
    for (std::uint64_t m = 0; m < n; ++m) {
      ASSERT_EQ(f_interval(m, n, table()), double_sum_f(m, n)) << m << "," << n;
      ASSERT_EQ(phi_interval(m, n, table()), double_sum_phi(m, n)) << m << "," << n;
      for (std::uint64_t k = 1; k <= n - m; k += 3) {
        const auto sk = static_cast<std::int64_t>(k);
        ASSERT_EQ(fk_interval(m, n, k, table()), double_sum_fk(m, n, sk));
        ASSERT_EQ(phik_interval(m, n, k, table()), double_sum_phik(m, n, sk));
      }
    }
  }
}

TEST(CountingTest, SumOptionsAreInvisible) {
  const SumOptions variants[] = {{true, false}, {false, false}, {true, true}, {false, true}};
  for (std::uint64_t n = 1; n <= 150; ++n) {
    for (std::uint64_t m = 0; m < n; m += 1 + n / 20) {
      const ExactInt f = f_interval(m, n, table());
      for (const auto& opt : variants) {
        ASSERT_EQ(f_interval(m, n, table(), opt), f) << m << "," << n;
      }
      for (std::uint64_t k = 1; k <= n - m; k += 1 + (n - m) / 6) {
        const ExactInt fk = fk_interval(m, n, k, table());
        for (const auto& opt : variants) {
          ASSERT_EQ(fk_interval(m, n, k, table(), opt), fk) << m << "," << n << "," << k;
        }
      }
    }
  }
  const SumOptions blocks{true, true};
  EXPECT_EQ(f_interval(1234, 12000, table(), blocks), f_interval(1234, 12000, table()));
}

TEST(CountingTest, CardinalitiesPartitionTheTotal) {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (std::uint64_t m = 0; m < n; ++m) {
      ExactInt fk_sum = 0;
      ExactInt phik_sum = 0;
      for (std::uint64_t k = 1; k <= n - m; ++k) {
        fk_sum += fk_interval(m, n, k, table());
        phik_sum += phik_interval(m, n, k, table());
      }
      ASSERT_EQ(fk_sum, f_interval(m, n, table())) << m << "," << n;
      if (n >= 2) {
        ASSERT_EQ(phik_sum, phi_interval(m, n, table())) << m << "," << n;
      }
    }
  }
}

TEST(CountingTest, MonotoneInN) {
  for (std::uint64_t n = 1; n < 120; ++n) {
    for (std::uint64_t m = 0; m < n; ++m) {
      ASSERT_LE(f_interval(m, n, table()), f_interval(m, n + 1, table())) << m << "," << n;
    }
  }
}

TEST(CountingTest, PhikOneIsTotient) {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    ASSERT_EQ(phik_interval(0, n, 1, table()), table().totient(n)) << "n = " << n;
  }
}

TEST(CountQueryTest, ValidateAndEvaluate) {
  EXPECT_EQ(evaluate({Family::F, 2, 6, std::nullopt}, table()), 9);
  EXPECT_EQ(evaluate({Family::PHIK, 2, 6, 2}, table()), 4);
  EXPECT_THROW(validate({Family::F, 3, 3, std::nullopt}), DomainError);
  EXPECT_THROW(validate({Family::FK, 0, 3, std::nullopt}), DomainError);
  EXPECT_THROW(validate({Family::FK, 0, 3, 0}), DomainError);
  EXPECT_THROW(validate({Family::PHI, 0, 3, 2}), DomainError);
}

TEST(FamilyTest, ParseIsCaseInsensitive) {
  EXPECT_EQ(parse_family("f"), Family::F);
  EXPECT_EQ(parse_family("PhiK"), Family::PHIK);
  EXPECT_EQ(to_string(parse_family("fk")), "FK");
  EXPECT_THROW(parse_family("g"), DomainError);
}

}  // namespace
}  // namespace rpsets
