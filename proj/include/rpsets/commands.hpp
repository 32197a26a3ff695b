#ifndef RPSETS_COMMANDS_HPP
#define RPSETS_COMMANDS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rpsets/bounds.hpp"
#include "rpsets/counting.hpp"
#include "rpsets/oracle.hpp"
#include "rpsets/records.hpp"
#include "rpsets/sieve.hpp"
#include "rpsets/sweep.hpp"

// The work behind each CLI subcommand, independent of argument parsing.

namespace rpsets {

/// Inclusive integer range.
struct IntRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// "a..b" or a single "a".
inline IntRange parse_range(std::string_view text) {
  auto number = [&](std::string_view s) -> std::uint64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw DomainError("invalid range '" + std::string(text) + "' (expected A or A..B)");
    }
    return std::stoull(std::string(s));
  };
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = number(text);
  } else {
    r.lo = number(text.substr(0, dots));
    r.hi = number(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw DomainError("invalid range '" + std::string(text) + "': empty");
  return r;
}

// ---------------------------------------------------------------------------
// compute

inline ExactInt cmd_compute(const CountQuery& query, std::uint64_t sieve_cap = kDefaultSieveCap) {
  validate(query);
  const SieveTable table = build_sieve(query.n, sieve_cap);
  return evaluate(query, table);
}

// ---------------------------------------------------------------------------
// table

struct TableSpec {
  std::vector<Family> families;
  IntRange m_range;
  IntRange n_range;
  /// Absent: every valid k, 1..n-m, for the cardinality families.
  std::optional<IntRange> k_range;
  Format format = Format::Csv;
  std::optional<std::string> output_path;
};

/// Cells in output order: family (F, FK, PHI, PHIK), then m, n, k ascending.
inline std::vector<CountQuery> table_cells(const TableSpec& spec) {
  if (spec.families.empty()) throw DomainError("table: at least one family required");
  if (spec.m_range.lo > spec.m_range.hi || spec.n_range.lo > spec.n_range.hi) {
    throw DomainError("table: invalid range");
  }
  if (spec.k_range && (spec.k_range->lo < 1 || spec.k_range->lo > spec.k_range->hi)) {
    throw DomainError("table: k range must lie in k >= 1");
  }
  std::vector<CountQuery> cells;
  for (const Family f : kAllFamilies) {
    if (std::find(spec.families.begin(), spec.families.end(), f) == spec.families.end()) continue;
    for (std::uint64_t m = spec.m_range.lo; m <= spec.m_range.hi; ++m) {
      for (std::uint64_t n = std::max(spec.n_range.lo, m + 1); n <= spec.n_range.hi; ++n) {
        if (!takes_k(f)) {
          cells.push_back({f, m, n, std::nullopt});
          continue;
        }
        const IntRange ks = spec.k_range.value_or(IntRange{1, n - m});
        for (std::uint64_t k = ks.lo; k <= ks.hi; ++k) cells.push_back({f, m, n, k});
      }
    }
  }
  return cells;
}

/// Evaluates every cell and writes the records to `out`, or to
/// spec.output_path when set. Returns the number of records.
inline std::size_t cmd_table(const TableSpec& spec, std::ostream& out, unsigned threads = 0,
                             std::uint64_t sieve_cap = kDefaultSieveCap) {
  const std::vector<CountQuery> cells = table_cells(spec);
  std::vector<ValueRecord> records;
  if (!cells.empty()) {
    std::uint64_t limit = 1;
    for (const auto& c : cells) limit = std::max(limit, c.n);
    const SieveTable table = build_sieve(limit, sieve_cap);
    records = parallel_map(
        cells,
        [&table](const CountQuery& q) {
          return ValueRecord{q.family, q.m, q.n, q.k, evaluate(q, table)};
        },
        threads);
  }
  if (spec.output_path) {
    std::ofstream file(*spec.output_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + *spec.output_path + "'");
    write_values(file, records, spec.format);
    if (!file.flush()) throw std::runtime_error("write failed: '" + *spec.output_path + "'");
  } else {
    write_values(out, records, spec.format);
  }
  return records.size();
}

// ---------------------------------------------------------------------------
// verify

enum class VerifyMode { Oracle, Bounds, Identities };

inline VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "oracle") return VerifyMode::Oracle;
  if (text == "bounds") return VerifyMode::Bounds;
  if (text == "identities") return VerifyMode::Identities;
  throw DomainError("unknown verify mode '" + std::string(text) +
                    "' (expected oracle, bounds or identities)");
}

struct VerifySpec {
  VerifyMode mode = VerifyMode::Oracle;
  std::uint64_t n_min = 1;
  std::uint64_t n_max = 16;
  /// Largest m considered; absent means every m < n.
  std::optional<std::uint64_t> m_max;
  /// Largest k for the cardinality families; absent means n - m, except in
  /// identities mode where it defaults to 10.
  std::optional<std::uint64_t> k_max;
  std::uint32_t width_cap = OracleConfig{}.max_width;
  unsigned threads = 0;
  std::uint64_t sieve_cap = kDefaultSieveCap;
};

struct VerifySummary {
  std::size_t intervals = 0;
  std::size_t cells = 0;
  std::vector<FailureRecord> failures;
  /// Bounds mode: cells where the second-family proof-line bound
  /// n C(floor((n-m)/3), k) does not hold. Informational only.
  std::size_t proof_line_misses = 0;
  std::size_t proof_line_cells = 0;

  bool ok() const noexcept { return failures.empty(); }
};

namespace detail {

struct Interval {
  std::uint64_t m;
  std::uint64_t n;
};

struct IntervalOutcome {
  std::size_t cells = 0;
  std::vector<FailureRecord> failures;
  std::size_t proof_line_misses = 0;
  std::size_t proof_line_cells = 0;
};

inline std::vector<Interval> verify_intervals(const VerifySpec& spec) {
  if (spec.n_min > spec.n_max || spec.n_max < 1) throw DomainError("verify: invalid n range");
  std::vector<Interval> out;
  for (std::uint64_t n = std::max<std::uint64_t>(spec.n_min, 1); n <= spec.n_max; ++n) {
    const std::uint64_t top = spec.m_max ? std::min(*spec.m_max, n - 1) : n - 1;
    for (std::uint64_t m = 0; m <= top; ++m) out.push_back({m, n});
  }
  return out;
}

/// Per-worker cache of binomial columns indexed by k.
class ColumnCache {
public:
  BinomialColumn& operator[](std::uint64_t k) {
    while (columns_.size() <= k) columns_.emplace_back(static_cast<std::int64_t>(columns_.size()));
    return columns_[k];
  }

private:
  std::vector<BinomialColumn> columns_;
};

inline void note_bound(IntervalOutcome& o, const BoundReport& r) {
  ++o.cells;
  if (r.holds_proof_line) {
    ++o.proof_line_cells;
    if (!*r.holds_proof_line) ++o.proof_line_misses;
  }
  if (!r.holds_lower) {
    o.failures.push_back({family_of(r.theorem), r.m, r.n, r.k, "gap >= 0", to_decimal(r.gap)});
  }
  if (!r.holds_upper) {
    o.failures.push_back(
        {family_of(r.theorem), r.m, r.n, r.k, "gap <= " + to_decimal(r.upper), to_decimal(r.gap)});
  }
}

}  // namespace detail

/// Runs one verification campaign. Failure records come back in interval
/// order (n, then m), then family, then k.
inline VerifySummary cmd_verify(const VerifySpec& spec) {
  const auto intervals = detail::verify_intervals(spec);
  const OracleConfig oracle_config{spec.width_cap};
  if (spec.mode == VerifyMode::Oracle) {
    for (const auto& iv : intervals) {
      if (iv.n - iv.m > spec.width_cap || spec.width_cap > kOracleHardCap) {
        detail::check_oracle_width(iv.m, iv.n, oracle_config);
      }
    }
  }
  const SieveTable table = build_sieve(spec.n_max, spec.sieve_cap);

  auto work = [&, columns = detail::ColumnCache{}](const detail::Interval& iv) mutable {
    detail::IntervalOutcome o;
    const auto [m, n] = iv;
    const std::uint64_t width = n - m;
    switch (spec.mode) {
      case VerifyMode::Oracle: {
        auto compare = [&](Family f, std::optional<std::uint64_t> k, const ExactInt& actual) {
          ++o.cells;
          const ExactInt expected = oracle_count({f, m, n, k}, oracle_config);
          if (expected != actual) {
            o.failures.push_back({f, m, n, k, to_decimal(expected), to_decimal(actual)});
          }
        };
        const std::uint64_t k_top = std::min(width, spec.k_max.value_or(width));
        compare(Family::F, std::nullopt, f_interval(m, n, table));
        for (std::uint64_t k = 1; k <= k_top; ++k) {
          compare(Family::FK, k, fk_interval(m, n, k, table, {}, &columns[k]));
        }
        compare(Family::PHI, std::nullopt, phi_interval(m, n, table));
        for (std::uint64_t k = 1; k <= k_top; ++k) {
          compare(Family::PHIK, k, phik_interval(m, n, k, table, &columns[k]));
        }
        break;
      }
      case VerifyMode::Bounds: {
        const std::uint64_t k_top = std::min(width, spec.k_max.value_or(width));
        detail::note_bound(o, check_f(m, n, table));
        for (std::uint64_t k = 1; k <= k_top; ++k) {
          detail::note_bound(o, check_fk(m, n, k, table, &columns[k]));
        }
        if (n >= 2) {
          detail::note_bound(o, check_phi(m, n, table));
          for (std::uint64_t k = 1; k <= k_top; ++k) {
            detail::note_bound(o, check_phik(m, n, k, table, &columns[k]));
          }
        }
        break;
      }
      case VerifyMode::Identities: {
        auto note = [&](Family f, std::optional<std::uint64_t> k, const PartitionSides& s) {
          ++o.cells;
          if (!s.equal()) {
            o.failures.push_back({f, m, n, k, to_decimal(s.total), to_decimal(s.by_gcd)});
          }
        };
        note(Family::F, std::nullopt, partition_sides_f(m, n, table));
        const std::uint64_t k_top = std::min(width, spec.k_max.value_or(10));
        for (std::uint64_t k = 1; k <= k_top; ++k) {
          note(Family::FK, k, partition_sides_fk(m, n, k, table, &columns[k]));
        }
        break;
      }
    }
    return o;
  };

  VerifySummary summary;
  summary.intervals = intervals.size();
  for (auto& o : parallel_map(intervals, work, spec.threads)) {
    summary.cells += o.cells;
    summary.proof_line_cells += o.proof_line_cells;
    summary.proof_line_misses += o.proof_line_misses;
    for (auto& f : o.failures) summary.failures.push_back(std::move(f));
  }
  return summary;
}

/// Human-readable summary; failure rows (if any) precede it as CSV.
inline void print_verify_summary(std::ostream& out, const VerifySpec& spec,
                                 const VerifySummary& s) {
  if (!s.failures.empty()) {
    write_failures(out, std::span<const FailureRecord>(s.failures), Format::Csv);
  }
  switch (spec.mode) {
    case VerifyMode::Oracle:
      out << "checked " << s.intervals << " intervals × 4 families, " << s.failures.size()
          << " failures\n";
      out << "cells compared: " << s.cells << '\n';
      break;
    case VerifyMode::Bounds:
      out << "checked " << s.cells << " bound reports over " << s.intervals << " intervals, "
          << s.failures.size() << " failures\n";
      out << "T2 proof-line bound n*C(floor((n-m)/3),k) missed in " << s.proof_line_misses
          << " of " << s.proof_line_cells << " cells (informational)\n";
      break;
    case VerifyMode::Identities:
      out << "checked " << s.cells << " partition identities over " << s.intervals
          << " intervals, " << s.failures.size() << " failures\n";
      break;
  }
}

}  // namespace rpsets

#endif  // RPSETS_COMMANDS_HPP
