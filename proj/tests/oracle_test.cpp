#include <cstdint>
#include <map>

#include <gtest/gtest.h>

#include "rpsets/counting.hpp"
#include "rpsets/oracle.hpp"

namespace rpsets {
namespace {

using ClassMap = std::map<std::uint64_t, ExactInt>;

TEST(OracleCountTest, Examples) {
  EXPECT_EQ(oracle_count({Family::F, 0, 3, std::nullopt}), 5);
  EXPECT_EQ(oracle_count({Family::PHIK, 2, 6, 2}), 4);
  EXPECT_EQ(oracle_count({Family::F, 1, 2, std::nullopt}), 0);
  EXPECT_EQ(oracle_count({Family::PHI, 0, 1, std::nullopt}), 1);
  EXPECT_EQ(oracle_count({Family::FK, 2, 6, 5}), 0);
}

TEST(OracleCountTest, RefusesWideIntervals) {
  try {
    oracle_count({Family::F, 0, 25, std::nullopt});
    FAIL() << "expected a refusal";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(oracle_count({Family::F, 0, 25, std::nullopt}, {25}));
  EXPECT_THROW(oracle_count({Family::F, 0, 5, std::nullopt}, {31}), CapacityError);
  EXPECT_THROW(oracle_count({Family::F, 5, 5, std::nullopt}), DomainError);
}

TEST(OracleGcdClassesTest, Examples) {
  EXPECT_EQ(oracle_gcd_class_counts(0, 2), (ClassMap{{1, 2}, {2, 1}}));
  EXPECT_EQ(oracle_gcd_class_counts(0, 1), (ClassMap{{1, 1}}));
  // {4,6} is the only set with gcd 2; {3} and {3,6} have gcd 3.
  EXPECT_EQ(oracle_gcd_class_counts(2, 6),
            (ClassMap{{1, 9}, {2, 1}, {3, 2}, {4, 1}, {5, 1}, {6, 1}}));
  EXPECT_THROW(oracle_gcd_class_counts(0, 30), CapacityError);
}

TEST(OracleGcdClassesTest, ClassesSumToAllNonemptySubsets) {
  for (std::uint64_t n = 1; n <= 18; ++n) {
    for (std::uint64_t m = 0; m < n; ++m) {
      ExactInt total = 0;
      for (const auto& [d, c] : oracle_gcd_class_counts(m, n)) total += c;
      ASSERT_EQ(total, pow2(static_cast<std::int64_t>(n - m)) - 1) << m << "," << n;
    }
  }
}

// Dividing by d maps gcd-d subsets of {m+1..n} onto relatively prime subsets
// of {floor(m/d)+1 .. floor(n/d)}.
TEST(OracleGcdClassesTest, ScalingBijection) {
  for (std::uint64_t n = 1; n <= 16; ++n) {
    for (std::uint64_t m = 0; m < n; ++m) {
      const auto classes = oracle_gcd_class_counts(m, n);
      for (std::uint64_t d = 1; d <= n; ++d) {
        if (n / d <= m / d) {
          ASSERT_EQ(classes.count(d), 0u);
          continue;
        }
        const ExactInt scaled = oracle_count({Family::F, m / d, n / d, std::nullopt});
        const auto it = classes.find(d);
        ASSERT_EQ(it == classes.end() ? ExactInt(0) : it->second, scaled)
            << "d=" << d << " m=" << m << " n=" << n;
      }
    }
  }
}

TEST(OracleCountTest, AgreesWithClosedForms) {
  const auto t = build_sieve(20);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    for (std::uint64_t m = 0; m < n; ++m) {
      ASSERT_EQ(oracle_count({Family::F, m, n, std::nullopt}), f_interval(m, n, t));
      ASSERT_EQ(oracle_count({Family::PHI, m, n, std::nullopt}), phi_interval(m, n, t));
      for (std::uint64_t k = 1; k <= n - m; ++k) {
        ASSERT_EQ(oracle_count({Family::FK, m, n, k}), fk_interval(m, n, k, t));
        ASSERT_EQ(oracle_count({Family::PHIK, m, n, k}), phik_interval(m, n, k, t));
      }
    }
  }
}

}  // namespace
}  // namespace rpsets
