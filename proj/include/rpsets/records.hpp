#ifndef RPSETS_RECORDS_HPP
#define RPSETS_RECORDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rpsets/bounds.hpp"
#include "rpsets/counting.hpp"
#include "rpsets/exact_math.hpp"

// Machine-readable output. Big integers are always decimal strings, never
// JSON numbers. Coordinates (m, n, k) are plain JSON numbers; k is null
// (JSON) or empty (CSV) for families without a cardinality.

namespace rpsets {

enum class Format { Json, Csv };

inline Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw DomainError("unknown format '" + std::string(text) + "' (expected json or csv)");
}

struct ValueRecord {
  Family family = Family::F;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  ExactInt value;
};

/// A verification mismatch. `expected` is the oracle value or the bound side.
struct FailureRecord {
  Family family = Family::F;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  std::string expected;
  std::string actual;
};

namespace detail {

inline std::string csv_k(const std::optional<std::uint64_t>& k) {
  return k ? std::to_string(*k) : std::string();
}

inline nlohmann::ordered_json json_k(const std::optional<std::uint64_t>& k) {
  return k ? nlohmann::ordered_json(*k) : nlohmann::ordered_json(nullptr);
}

inline void write_json_array(std::ostream& out, const nlohmann::ordered_json& array) {
  out << array.dump(2) << '\n';
}

}  // namespace detail

inline constexpr std::string_view kValueCsvHeader = "family,m,n,k,value";
inline constexpr std::string_view kBoundCsvHeader =
    "theorem,m,n,k,gap,upper,holds_lower,holds_upper,holds_proof_line";
inline constexpr std::string_view kFailureCsvHeader = "family,m,n,k,expected,actual";

inline std::string csv_row(const ValueRecord& r) {
  return std::string(to_string(r.family)) + ',' + std::to_string(r.m) + ',' +
         std::to_string(r.n) + ',' + detail::csv_k(r.k) + ',' + to_decimal(r.value);
}

inline std::string csv_row(const FailureRecord& r) {
  return std::string(to_string(r.family)) + ',' + std::to_string(r.m) + ',' +
         std::to_string(r.n) + ',' + detail::csv_k(r.k) + ',' + r.expected + ',' + r.actual;
}

inline std::string csv_row(const BoundReport& r) {
  auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
  return std::string(to_string(r.theorem)) + ',' + std::to_string(r.m) + ',' +
         std::to_string(r.n) + ',' + detail::csv_k(r.k) + ',' + to_decimal(r.gap) + ',' +
         to_decimal(r.upper) + ',' + flag(r.holds_lower) + ',' + flag(r.holds_upper) + ',' +
         (r.holds_proof_line ? flag(*r.holds_proof_line) : std::string());
}

inline nlohmann::ordered_json to_json(const ValueRecord& r) {
  return {{"family", to_string(r.family)}, {"m", r.m}, {"n", r.n},
          {"k", detail::json_k(r.k)},      {"value", to_decimal(r.value)}};
}

inline nlohmann::ordered_json to_json(const FailureRecord& r) {
  return {{"family", to_string(r.family)}, {"m", r.m}, {"n", r.n}, {"k", detail::json_k(r.k)},
          {"expected", r.expected},        {"actual", r.actual}};
}

inline nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j = {{"theorem", to_string(r.theorem)},
                              {"m", r.m},
                              {"n", r.n},
                              {"k", detail::json_k(r.k)},
                              {"gap", to_decimal(r.gap)},
                              {"upper", to_decimal(r.upper)},
                              {"holds_lower", r.holds_lower},
                              {"holds_upper", r.holds_upper}};
  j["holds_proof_line"] =
      r.holds_proof_line ? nlohmann::ordered_json(*r.holds_proof_line) : nlohmann::ordered_json();
  return j;
}

/// Inverse of to_json for value records.
inline ValueRecord value_record_from_json(const nlohmann::ordered_json& j) {
  ValueRecord r;
  r.family = parse_family(j.at("family").get<std::string>());
  r.m = j.at("m").get<std::uint64_t>();
  r.n = j.at("n").get<std::uint64_t>();
  if (!j.at("k").is_null()) r.k = j.at("k").get<std::uint64_t>();
  r.value = parse_decimal(j.at("value").get<std::string>());
  return r;
}

template <typename Record>
void write_records(std::ostream& out, std::span<const Record> records, Format format,
                   std::string_view csv_header) {
  if (format == Format::Csv) {
    out << csv_header << '\n';
    for (const auto& r : records) out << csv_row(r) << '\n';
  } else {
    auto array = nlohmann::ordered_json::array();
    for (const auto& r : records) array.push_back(to_json(r));
    detail::write_json_array(out, array);
  }
}

inline void write_values(std::ostream& out, std::span<const ValueRecord> records, Format format) {
  write_records(out, records, format, kValueCsvHeader);
}

inline void write_bound_reports(std::ostream& out, std::span<const BoundReport> reports,
                                Format format) {
  write_records(out, reports, format, kBoundCsvHeader);
}

inline void write_failures(std::ostream& out, std::span<const FailureRecord> failures,
                           Format format) {
  write_records(out, failures, format, kFailureCsvHeader);
}

}  // namespace rpsets

#endif  // RPSETS_RECORDS_HPP
