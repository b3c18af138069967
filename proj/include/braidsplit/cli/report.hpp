#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace braidsplit::cli {

enum class Verdict { split, nonsplit, skipped };

std::string to_string(Verdict v);
Verdict verdict_from_string(std::string const &s);

struct OracleResult
{
  std::string name;
  std::optional<bool> split; // empty when the oracle did not run
  std::string note;

  bool operator==(OracleResult const &) const = default;
};

// One (n, q) instance. Vectors are plain residues in [0, q).
struct Record
{
  std::size_t n = 0;
  std::int64_t q = 0;
  std::string instance = "wreath"; // or "module" for an explicit module file
  Verdict verdict = Verdict::skipped;
  std::vector<std::vector<std::int64_t>> section;       // a_1..a_{n-1}
  std::vector<std::vector<std::uint32_t>> permutations;  // g_s a_s as image arrays
  // Closed-form section for odd q or q = 2 (mod 4), when one exists.
  std::vector<std::vector<std::int64_t>> constructed_section;
  std::vector<std::int64_t> certificate;                // annihilator row
  std::vector<std::int64_t> section_obstruction;
  bool verified = false;
  std::vector<OracleResult> oracles;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
  double timing_ms = 0;

  // Timings are ignored.
  bool operator==(Record const &o) const;
};

struct Check
{
  std::string name;
  bool passed = false;
  std::string detail;

  bool operator==(Check const &) const = default;
};

struct Summary
{
  // Verdict is Split exactly when 4 does not divide q, over decided wreath records.
  bool dichotomy_holds = true;
  std::size_t dichotomy_deviations = 0;
  std::size_t failures = 0;

  bool operator==(Summary const &) const = default;
};

struct Report
{
  std::string command;
  std::vector<Record> records;
  std::vector<Check> checks;
  Summary summary;
  double timing_ms = 0;

  bool operator==(Report const &o) const;
  // Recomputes the summary from records and checks.
  void finalize();
  bool ok() const { return summary.failures == 0; }
};

nlohmann::json to_json(Report const &report);
Report report_from_json(nlohmann::json const &j);

void write_json(std::ostream &out, Report const &report);
void write_text(std::ostream &out, Report const &report);

} // namespace braidsplit::cli
