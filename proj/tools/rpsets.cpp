// rpsets: count relatively prime subsets of {m+1, ..., n}.
//
//   rpsets compute f --m 2 --n 6
//   rpsets table --families f,phi --m 0 --n 1..20 --format json --out t.json
//   rpsets verify oracle --n-max 16
//
// Exit status: 0 success, 1 usage error, 2 verification failure,
// 3 capacity error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rpsets/commands.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitCapacity = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of relatively prime subsets of integer intervals"};
  app.set_config("--config", "", "Optional TOML/INI file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t sieve_cap = rpsets::kDefaultSieveCap;
  unsigned threads = 0;
  app.add_option("--sieve-cap", sieve_cap, "Largest sieve limit allowed")->capture_default_str();
  app.add_option("--threads", threads, "Worker threads for sweeps (0 = hardware)");

  // compute
  auto* compute = app.add_subcommand("compute", "Print one exact count");
  std::string family_name;
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> k;
  compute->add_option("family", family_name, "f | fk | phi | phik")->required();
  compute->add_option("--m", m, "Interval is {m+1..n}")->required();
  compute->add_option("--n", n, "Interval is {m+1..n}")->required();
  compute->add_option("--k", k, "Subset cardinality (fk, phik)");

  // table
  auto* table = app.add_subcommand("table", "Emit a sweep of values as CSV or JSON");
  std::vector<std::string> table_families;
  std::string m_range = "0";
  std::string n_range;
  std::optional<std::string> k_range;
  std::string table_format = "csv";
  std::optional<std::string> out_path;
  table->add_option("--families", table_families, "Families to emit")
      ->delimiter(',')
      ->required();
  table->add_option("--m", m_range, "m or m_lo..m_hi")->capture_default_str();
  table->add_option("--n", n_range, "n or n_lo..n_hi")->required();
  table->add_option("--k", k_range, "k or k_lo..k_hi (default: every valid k)");
  table->add_option("--format", table_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  table->add_option("--out", out_path, "Output file (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check closed forms, bounds or identities");
  std::string verify_mode;
  rpsets::VerifySpec vspec;
  std::optional<std::uint64_t> m_max;
  std::optional<std::uint64_t> k_max;
  verify->add_option("mode", verify_mode, "oracle | bounds | identities")
      ->check(CLI::IsMember({"oracle", "bounds", "identities"}))
      ->required();
  verify->add_option("--n-min", vspec.n_min, "Smallest n")->capture_default_str();
  verify->add_option("--n-max", vspec.n_max, "Largest n")->capture_default_str();
  verify->add_option("--m-max", m_max, "Largest m (default: every m < n)");
  verify->add_option("--k-max", k_max, "Largest k for the cardinality families");
  verify->add_option("--width-cap", vspec.width_cap, "Oracle width cap n - m")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) {
      rpsets::CountQuery q{rpsets::parse_family(family_name), m, n, k};
      std::cout << rpsets::to_decimal(rpsets::cmd_compute(q, sieve_cap)) << '\n';
      return kExitOk;
    }
    if (*table) {
      rpsets::TableSpec spec;
      for (const auto& f : table_families) spec.families.push_back(rpsets::parse_family(f));
      spec.m_range = rpsets::parse_range(m_range);
      spec.n_range = rpsets::parse_range(n_range);
      if (k_range) spec.k_range = rpsets::parse_range(*k_range);
      spec.format = rpsets::parse_format(table_format);
      spec.output_path = out_path;
      rpsets::cmd_table(spec, std::cout, threads, sieve_cap);
      return kExitOk;
    }
    if (*verify) {
      vspec.mode = rpsets::parse_verify_mode(verify_mode);
      vspec.m_max = m_max;
      vspec.k_max = k_max;
      vspec.threads = threads;
      vspec.sieve_cap = sieve_cap;
      const auto summary = rpsets::cmd_verify(vspec);
      rpsets::print_verify_summary(std::cout, vspec, summary);
      return summary.ok() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const rpsets::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
