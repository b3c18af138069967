#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidsplit/error.hpp"
#include "braidsplit/oracle.hpp"
#include "braidsplit/sigma_module.hpp"

namespace braidsplit::cli {

// Parse failure at a 1-based line and column of a config or module file.
class ParseError : public Error
{
public:
  ParseError(std::string const &source, std::size_t line, std::size_t column,
             std::string const &message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// Flat key = value text. A key whose value is empty on its own line takes the
// following indented lines as matrix rows. '#' starts a comment.
struct ConfigEntry
{
  std::string key;
  std::string value;
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t line = 0;
  std::size_t column = 0; // of the value
};

std::vector<ConfigEntry> parse_key_values(std::string_view text,
                                          std::string const &source = "<input>");

// Group closures in the CLI run many at once; the library cap is too roomy.
inline constexpr std::size_t default_cli_group_budget = 200'000;

enum class Command { analyze, sweep, verify_paper };
enum class OutputFormat { text, json };

std::string to_string(Command c);
std::string to_string(OutputFormat f);

struct RunConfig
{
  Command command = Command::analyze;
  std::vector<std::size_t> ns;
  std::vector<std::int64_t> qs;
  std::string family = "wreath";
  std::optional<std::filesystem::path> module_file;
  std::uint64_t budget_lifts = default_lift_budget;
  std::size_t budget_group = default_cli_group_budget;
  OutputFormat format = OutputFormat::text;
  std::optional<std::filesystem::path> out;
  std::size_t workers = 1;
};

// "A..B" inclusive; empty when B < A.
std::vector<std::int64_t> parse_range(std::string_view text);

/// Command line: <analyze|sweep|verify-paper> [flags]. Settings from --config
/// are applied first, flags override them. Throws DomainError or ParseError
/// on anything malformed or unknown, including unknown flags.
RunConfig parse_command_line(int argc, char const *const *argv);

// key = value settings with the flag names as keys (n, q, q-range, ...).
void apply_config_text(RunConfig &config, std::string_view text,
                       std::string const &source = "<config>");

/// Explicit module:
///   n = 3
///   q = 5
///   action 1 =      (one per s, rows of the matrix)
///   generators =    (rows are generators of A)
///   f 1 = 1 1 0     (one per s)
ExtensionData parse_module(std::string_view text, std::string const &source = "<module>");
ExtensionData load_module_file(std::filesystem::path const &path);

} // namespace braidsplit::cli
