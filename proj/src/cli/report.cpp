#include "braidsplit/cli/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "braidsplit/error.hpp"

namespace braidsplit::cli {

using nlohmann::json;

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::split: return "split";
  case Verdict::nonsplit: return "nonsplit";
  case Verdict::skipped: return "skipped";
  }
  return "?";
}

Verdict verdict_from_string(std::string const &s)
{
  if (s == "split")
    return Verdict::split;
  if (s == "nonsplit")
    return Verdict::nonsplit;
  if (s == "skipped")
    return Verdict::skipped;
  throw DomainError("unknown verdict '" + s + "'");
}

bool Record::operator==(Record const &o) const
{
  return n == o.n && q == o.q && instance == o.instance && verdict == o.verdict && section == o.section &&
         permutations == o.permutations &&
         constructed_section == o.constructed_section && certificate == o.certificate &&
         section_obstruction == o.section_obstruction && verified == o.verified &&
         oracles == o.oracles && notes == o.notes && failures == o.failures;
}

bool Report::operator==(Report const &o) const
{
  return command == o.command && records == o.records && checks == o.checks &&
         summary == o.summary;
}

void Report::finalize()
{
  summary = {};
  for (auto const &r : records) {
    summary.failures += r.failures.size();
    if (r.verdict == Verdict::skipped || r.instance != "wreath")
      continue;
    if ((r.verdict == Verdict::split) != (r.q % 4 != 0))
      ++summary.dichotomy_deviations;
  }
  summary.dichotomy_holds = summary.dichotomy_deviations == 0;
  for (auto const &c : checks)
    summary.failures += !c.passed;
}

namespace {

json oracle_json(OracleResult const &o)
{
  return {{"name", o.name}, {"split", o.split ? json(*o.split) : json(nullptr)}, {"note", o.note}};
}

json record_json(Record const &r)
{
  json j = {{"n", r.n},
            {"q", r.q},
            {"instance", r.instance},
            {"verdict", to_string(r.verdict)},
            {"verified", r.verified},
            {"notes", r.notes},
            {"failures", r.failures},
            {"timing_ms", r.timing_ms}};
  if (r.verdict == Verdict::split) {
    j["section"] = r.section;
    if (!r.permutations.empty())
      j["permutations"] = r.permutations;
    if (!r.constructed_section.empty())
      j["constructed_section"] = r.constructed_section;
    if (!r.section_obstruction.empty())
      j["section_obstruction"] = r.section_obstruction;
  } else if (r.verdict == Verdict::nonsplit) {
    j["certificate"] = r.certificate;
  }
  j["oracles"] = json::array();
  for (auto const &o : r.oracles)
    j["oracles"].push_back(oracle_json(o));
  return j;
}

Record record_from(json const &j)
{
  Record r;
  r.n = j.at("n").get<std::size_t>();
  r.q = j.at("q").get<std::int64_t>();
  r.instance = j.at("instance").get<std::string>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.verified = j.at("verified").get<bool>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.failures = j.at("failures").get<std::vector<std::string>>();
  r.timing_ms = j.value("timing_ms", 0.0);
  if (j.contains("section"))
    r.section = j["section"].get<std::vector<std::vector<std::int64_t>>>();
  if (j.contains("permutations"))
    r.permutations = j["permutations"].get<std::vector<std::vector<std::uint32_t>>>();
  if (j.contains("constructed_section"))
    r.constructed_section = j["constructed_section"].get<std::vector<std::vector<std::int64_t>>>();
  if (j.contains("section_obstruction"))
    r.section_obstruction = j["section_obstruction"].get<std::vector<std::int64_t>>();
  if (j.contains("certificate"))
    r.certificate = j["certificate"].get<std::vector<std::int64_t>>();
  for (auto const &o : j.at("oracles")) {
    OracleResult res{o.at("name").get<std::string>(), std::nullopt, o.at("note").get<std::string>()};
    if (!o.at("split").is_null())
      res.split = o["split"].get<bool>();
    r.oracles.push_back(std::move(res));
  }
  return r;
}

std::string join_vec(std::vector<std::int64_t> const &v)
{
  std::ostringstream ss;
  ss << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    ss << (i ? "," : "") << v[i];
  ss << ']';
  return ss.str();
}

} // namespace

json to_json(Report const &report)
{
  json j;
  j["command"] = report.command;
  j["records"] = json::array();
  for (auto const &r : report.records)
    j["records"].push_back(record_json(r));
  j["checks"] = json::array();
  for (auto const &c : report.checks)
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["summary"] = {{"dichotomy_holds", report.summary.dichotomy_holds},
                  {"dichotomy_deviations", report.summary.dichotomy_deviations},
                  {"failures", report.summary.failures}};
  j["timing_ms"] = report.timing_ms;
  return j;
}

Report report_from_json(json const &j)
{
  try {
    Report report;
    report.command = j.at("command").get<std::string>();
    for (auto const &r : j.at("records"))
      report.records.push_back(record_from(r));
    for (auto const &c : j.at("checks"))
      report.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                               c.at("detail").get<std::string>()});
    auto const &s = j.at("summary");
    report.summary.dichotomy_holds = s.at("dichotomy_holds").get<bool>();
    report.summary.dichotomy_deviations = s.at("dichotomy_deviations").get<std::size_t>();
    report.summary.failures = s.at("failures").get<std::size_t>();
    report.timing_ms = j.value("timing_ms", 0.0);
    return report;
  } catch (json::exception const &e) {
    throw DomainError(std::string("malformed report: ") + e.what());
  }
}

namespace {

// Indented like dump(2), but arrays of numbers stay on one line.
void pretty(std::ostream &out, json const &j, int depth)
{
  std::string const pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  std::string const close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object() && !j.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out << pad << json(it.key()).dump() << ": ";
      pretty(out, it.value(), depth + 1);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << close << '}';
  } else if (j.is_array() && !j.empty() &&
             std::ranges::any_of(j, [](json const &e) { return e.is_structured() || e.is_string(); })) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      pretty(out, j[i], depth + 1);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << close << ']';
  } else {
    out << j.dump(-1, ' ', false);
  }
}

} // namespace

void write_json(std::ostream &out, Report const &report)
{
  pretty(out, to_json(report), 0);
  out << '\n';
}

void write_text(std::ostream &out, Report const &report)
{
  if (!report.records.empty()) {
    out << std::left << std::setw(4) << "n" << std::setw(6) << "q" << std::setw(10) << "verdict"
        << std::setw(10) << "verified" << std::setw(28) << "oracles" << "detail\n";
    for (auto const &r : report.records) {
      std::string oracles;
      for (auto const &o : r.oracles)
        oracles += o.name + "=" + (o.split ? (*o.split ? "split" : "nonsplit") : "-") + " ";
      std::string detail;
      if (r.verdict == Verdict::split) {
        detail = "a =";
        for (auto const &a : r.section)
          detail += " " + join_vec(a);
        if (!r.constructed_section.empty()) {
          detail += "  closed form:";
          for (auto const &a : r.constructed_section)
            detail += " " + join_vec(a);
        }
      } else if (r.verdict == Verdict::nonsplit) {
        detail = "certificate " + join_vec(r.certificate);
      }
      out << std::left << std::setw(4) << r.n << std::setw(6) << r.q << std::setw(10)
          << to_string(r.verdict) << std::setw(10) << (r.verified ? "yes" : "no") << std::setw(28)
          << oracles << detail << '\n';
      for (auto const &note : r.notes)
        out << "      note: " << note << '\n';
      for (auto const &f : r.failures)
        out << "      FAILURE: " << f << '\n';
    }
  }
  for (auto const &c : report.checks)
    out << (c.passed ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
        << '\n';
  out << "dichotomy (split iff 4 does not divide q): "
      << (report.summary.dichotomy_holds ? "holds" : "violated");
  if (report.records.empty())
    out << " (vacuous)";
  else if (!report.summary.dichotomy_holds)
    out << " (" << report.summary.dichotomy_deviations << " deviations)";
  out << "\nfailures: " << report.summary.failures << '\n';
}

} // namespace braidsplit::cli
