#include "braidsplit/cli/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace braidsplit::cli {

ParseError::ParseError(std::string const &source, std::size_t line, std::size_t column,
                       std::string const &message)
  : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
    line_(line), column_(column)
{}

namespace {

std::string_view trim(std::string_view s)
{
  auto const ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::int64_t> parse_ints(std::string_view s, std::string const &source,
                                     std::size_t line, std::size_t column)
{
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == ',' || s[i] == '\r') {
      ++i;
      continue;
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
    if (ec != std::errc{} || ptr == s.data() + i)
      throw ParseError(source, line, column + i, "expected an integer");
    i = static_cast<std::size_t>(ptr - s.data());
    out.push_back(v);
  }
  return out;
}

template <class T>
T parse_number(ConfigEntry const &e, std::string const &source)
{
  auto v = trim(e.value);
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ParseError(source, e.line, e.column, "expected a number for '" + e.key + "'");
  return out;
}

std::vector<std::size_t> to_sizes(std::vector<std::int64_t> const &v)
{
  std::vector<std::size_t> out;
  for (auto x : v) {
    if (x < 2)
      throw DomainError("n must be at least 2, got " + std::to_string(x));
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

std::vector<std::int64_t> check_q(std::vector<std::int64_t> v)
{
  for (auto x : v)
    check_modulus(x);
  return v;
}

Command parse_command(std::string_view s)
{
  if (s == "analyze")
    return Command::analyze;
  if (s == "sweep")
    return Command::sweep;
  if (s == "verify-paper")
    return Command::verify_paper;
  throw DomainError("unknown command '" + std::string(s) + "'");
}

OutputFormat parse_format(std::string_view s)
{
  if (s == "text")
    return OutputFormat::text;
  if (s == "json")
    return OutputFormat::json;
  throw DomainError("unknown format '" + std::string(s) + "' (text or json)");
}

void check_positive(std::uint64_t v, char const *what)
{
  if (v == 0)
    throw DomainError(std::string(what) + " must be positive");
}

std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

std::string to_string(Command c)
{
  switch (c) {
  case Command::analyze: return "analyze";
  case Command::sweep: return "sweep";
  case Command::verify_paper: return "verify-paper";
  }
  return "?";
}

std::string to_string(OutputFormat f)
{
  return f == OutputFormat::text ? "text" : "json";
}

std::vector<ConfigEntry> parse_key_values(std::string_view text, std::string const &source)
{
  std::vector<ConfigEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool in_matrix = false;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (trim(line).empty()) {
      in_matrix = false;
      continue;
    }

    bool const indented = line.front() == ' ' || line.front() == '\t';
    auto eq = line.find('=');
    if (indented && eq == std::string_view::npos) {
      if (!in_matrix)
        throw ParseError(source, line_no, 1, "matrix row outside a matrix block");
      auto first = line.find_first_not_of(" \t");
      out.back().rows.push_back(parse_ints(line.substr(first), source, line_no, first + 1));
      continue;
    }
    if (eq == std::string_view::npos)
      throw ParseError(source, line_no, 1, "expected 'key = value'");
    auto key = trim(line.substr(0, eq));
    if (key.empty())
      throw ParseError(source, line_no, 1, "missing key");
    auto value = line.substr(eq + 1);
    auto lead = value.find_first_not_of(" \t");
    ConfigEntry e;
    e.key = std::string(key);
    e.value = std::string(trim(value));
    e.line = line_no;
    e.column = lead == std::string_view::npos ? eq + 1 : eq + 2 + lead;
    in_matrix = e.value.empty();
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::int64_t> parse_range(std::string_view text)
{
  auto dots = text.find("..");
  std::int64_t lo = 0, hi = 0;
  auto parse = [&](std::string_view s, std::int64_t &v) {
    s = trim(s);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
  };
  if (dots == std::string_view::npos || !parse(text.substr(0, dots), lo) ||
      !parse(text.substr(dots + 2), hi))
    throw DomainError("malformed range '" + std::string(text) + "' (expected A..B)");
  std::vector<std::int64_t> out;
  for (auto v = lo; v <= hi; ++v)
    out.push_back(v);
  return out;
}

void apply_config_text(RunConfig &config, std::string_view text, std::string const &source)
{
  for (auto const &e : parse_key_values(text, source)) {
    auto fail = [&](std::string const &msg) -> void {
      throw ParseError(source, e.line, e.column, msg);
    };
    try {
      if (e.key == "n")
        config.ns = to_sizes({parse_number<std::int64_t>(e, source)});
      else if (e.key == "q")
        config.qs = check_q({parse_number<std::int64_t>(e, source)});
      else if (e.key == "n-range")
        config.ns = to_sizes(parse_range(e.value));
      else if (e.key == "q-range")
        config.qs = check_q(parse_range(e.value));
      else if (e.key == "family")
        config.family = e.value;
      else if (e.key == "module-file")
        config.module_file = e.value;
      else if (e.key == "budget-lifts") {
        config.budget_lifts = parse_number<std::uint64_t>(e, source);
        check_positive(config.budget_lifts, "budget-lifts");
      } else if (e.key == "budget-group") {
        config.budget_group = parse_number<std::size_t>(e, source);
        check_positive(config.budget_group, "budget-group");
      } else if (e.key == "format")
        config.format = parse_format(e.value);
      else if (e.key == "out")
        config.out = e.value;
      else if (e.key == "workers") {
        config.workers = parse_number<std::size_t>(e, source);
        check_positive(config.workers, "workers");
      } else
        fail("unknown key '" + e.key + "'");
    } catch (ParseError const &) {
      throw;
    } catch (Error const &err) {
      fail(err.what());
    }
  }
  if (config.family != "wreath")
    throw DomainError("unknown family '" + config.family + "'");
}

RunConfig parse_command_line(int argc, char const *const *argv)
{
  CLI::App app{"braidsplit"};
  app.set_help_flag();
  app.allow_extras(false);

  std::string command;
  std::optional<std::int64_t> n, q;
  std::optional<std::string> n_range, q_range, family, module_file, format, out, config_path;
  std::optional<std::uint64_t> budget_lifts;
  std::optional<std::size_t> budget_group, workers;

  app.add_option("command", command)->required();
  app.add_option("--n", n);
  app.add_option("--q", q);
  app.add_option("--n-range", n_range);
  app.add_option("--q-range", q_range);
  app.add_option("--family", family);
  app.add_option("--module-file", module_file);
  app.add_option("--budget-lifts", budget_lifts);
  app.add_option("--budget-group", budget_group);
  app.add_option("--format", format);
  app.add_option("--out", out);
  app.add_option("--workers", workers);
  app.add_option("--config", config_path);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    throw DomainError(e.what());
  }

  RunConfig config;
  config.command = parse_command(command);
  if (config_path)
    apply_config_text(config, read_file(*config_path), *config_path);

  if (n && n_range)
    throw DomainError("--n and --n-range are exclusive");
  if (q && q_range)
    throw DomainError("--q and --q-range are exclusive");
  if (n)
    config.ns = to_sizes({*n});
  if (n_range)
    config.ns = to_sizes(parse_range(*n_range));
  if (q)
    config.qs = check_q({*q});
  if (q_range)
    config.qs = check_q(parse_range(*q_range));
  if (family) {
    if (*family != "wreath")
      throw DomainError("unknown family '" + *family + "'");
    config.family = *family;
  }
  if (module_file)
    config.module_file = *module_file;
  if (budget_lifts) {
    check_positive(*budget_lifts, "--budget-lifts");
    config.budget_lifts = *budget_lifts;
  }
  if (budget_group) {
    check_positive(*budget_group, "--budget-group");
    config.budget_group = *budget_group;
  }
  if (format)
    config.format = parse_format(*format);
  if (out)
    config.out = *out;
  if (workers) {
    check_positive(*workers, "--workers");
    config.workers = *workers;
  }

  if (config.command == Command::analyze && !config.module_file &&
      (config.ns.size() != 1 || config.qs.size() != 1))
    throw DomainError("analyze needs a single --n and --q, or --module-file");
  return config;
}

ExtensionData parse_module(std::string_view text, std::string const &source)
{
  auto entries = parse_key_values(text, source);
  std::optional<std::int64_t> n, q;
  std::map<std::size_t, ConfigEntry const *> actions, fs;
  ConfigEntry const *gens = nullptr;

  auto indexed = [&](ConfigEntry const &e, std::string_view prefix) -> std::optional<std::size_t> {
    if (!e.key.starts_with(prefix))
      return std::nullopt;
    auto rest = trim(std::string_view(e.key).substr(prefix.size()));
    std::size_t s = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), s);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || s == 0)
      throw ParseError(source, e.line, 1, "bad index in '" + e.key + "'");
    return s;
  };

  for (auto const &e : entries) {
    if (e.key == "n")
      n = parse_number<std::int64_t>(e, source);
    else if (e.key == "q")
      q = parse_number<std::int64_t>(e, source);
    else if (e.key == "generators")
      gens = &e;
    else if (auto s = indexed(e, "action "))
      actions[*s] = &e;
    else if (auto s = indexed(e, "f "))
      fs[*s] = &e;
    else
      throw ParseError(source, e.line, 1, "unknown key '" + e.key + "'");
  }
  if (!n || !q)
    throw ParseError(source, 1, 1, "module needs n and q");
  if (*n < 2)
    throw ParseError(source, 1, 1, "n must be at least 2");
  check_modulus(*q);
  auto const dim = static_cast<std::size_t>(*n);
  if (!gens)
    throw ParseError(source, 1, 1, "module needs a 'generators =' block");

  auto to_matrix = [&](ConfigEntry const &e, std::size_t rows_expected) {
    if (rows_expected != 0 && e.rows.size() != rows_expected)
      throw ParseError(source, e.line, 1,
                       "'" + e.key + "' needs " + std::to_string(rows_expected) + " rows");
    for (std::size_t i = 0; i < e.rows.size(); ++i)
      if (e.rows[i].size() != dim)
        throw ParseError(source, e.line + i + 1, 1,
                         "row has " + std::to_string(e.rows[i].size()) + " entries, expected " +
                           std::to_string(dim));
    return ResidueMatrix::from_rows(e.rows, static_cast<Index>(dim), *q);
  };

  std::vector<ResidueMatrix> acts;
  std::vector<ResidueVector> f;
  for (std::size_t s = 1; s < dim; ++s) {
    if (!actions.contains(s))
      throw ParseError(source, 1, 1, "missing 'action " + std::to_string(s) + "'");
    if (!fs.contains(s))
      throw ParseError(source, 1, 1, "missing 'f " + std::to_string(s) + "'");
    acts.push_back(to_matrix(*actions[s], dim));
    auto const &fe = *fs[s];
    auto v = parse_ints(fe.value, source, fe.line, fe.column);
    if (v.size() != dim)
      throw ParseError(source, fe.line, fe.column, "f needs " + std::to_string(dim) + " entries");
    f.emplace_back(v, *q);
  }
  for (auto const *m : {&actions, &fs})
    if (!m->empty() && m->rbegin()->first >= dim)
      throw ParseError(source, m->rbegin()->second->line, 1, "index beyond n - 1");

  try {
    SigmaModule module(dim, *q, std::move(acts), to_matrix(*gens, 0));
    return ExtensionData(std::move(module), std::move(f));
  } catch (InvariantViolation const &err) {
    throw InvariantViolation(source + ": " + err.what());
  }
}

ExtensionData load_module_file(std::filesystem::path const &path)
{
  return parse_module(read_file(path), path.string());
}

} // namespace braidsplit::cli
