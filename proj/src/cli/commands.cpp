#include "braidsplit/cli/commands.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <thread>

#include "braidsplit/error.hpp"
#include "braidsplit/oracle.hpp"
#include "braidsplit/split.hpp"
#include "braidsplit/wreath.hpp"

namespace braidsplit::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

BigInt factorial(std::size_t n)
{
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= static_cast<unsigned>(i);
  return f;
}

std::string label(std::size_t n, std::int64_t q)
{
  return "n=" + std::to_string(n) + " q=" + std::to_string(q);
}

std::vector<std::string> section_failures(SectionReport const &rep)
{
  std::vector<std::string> out;
  for (std::size_t s = 0; s < rep.involution.size(); ++s)
    if (!rep.involution[s])
      out.push_back("involution condition fails at s=" + std::to_string(s + 1));
  for (std::size_t r = 0; r < rep.adjacent.size(); ++r)
    if (!rep.adjacent[r])
      out.push_back("braid condition fails at r=" + std::to_string(r + 1));
  for (auto const &p : rep.far)
    if (!p.holds)
      out.push_back("far commutation fails for (" + std::to_string(p.s) + "," +
                    std::to_string(p.t) + ")");
  if (rep.realized == false)
    out.push_back("lifted permutations violate the Coxeter relations");
  return out;
}

bool solves_system(ExtensionData const &ext, std::vector<ResidueVector> const &a)
{
  auto sys = assemble_split_system(ext);
  std::vector<ResidueVector> parts;
  for (auto const &as : a) {
    auto c = ext.module().coordinates(as);
    if (!c)
      return false;
    parts.push_back(*c);
  }
  return sys.matrix * concat(parts) == sys.rhs;
}

void run_oracles(Record &rec, ExtensionData const &ext, InstanceBudgets const &budgets,
                 bool wreath_family)
{
  bool const decided = rec.verdict == Verdict::split;
  BigInt const a_order = ext.module().order();
  BigInt tuples = 1;
  for (std::size_t s = 1; s < ext.module().n(); ++s)
    tuples *= a_order;

  OracleResult lifts{"lifts", std::nullopt, {}};
  if (tuples <= budgets.lifts) {
    auto res = brute_force_lifts(ext, {budgets.lifts, std::nullopt});
    lifts.split = res.witnesses > 0;
    lifts.note = std::to_string(res.witnesses) + " of " + std::to_string(res.searched) +
                 " tuples (" + std::to_string(res.system_witnesses) + " satisfy the system)";
  } else {
    lifts.note = "skipped: |A|^(n-1) = " + tuples.str() + " over budget";
  }
  rec.oracles.push_back(lifts);

  if (wreath_family) {
    BigInt const group_order = a_order * factorial(ext.module().n());
    OracleResult comp{"complement", std::nullopt, {}};
    if (group_order <= default_complement_cap && group_order <= budgets.group) {
      auto const &real = *ext.realization();
      auto group = generate(real.generators, budgets.group);
      auto res = complement_search(group, real.blocks);
      comp.split = res.found.has_value();
      comp.note = std::to_string(res.tuples_tried) + " tuples tried";
    } else {
      comp.note = "skipped: |G| = " + group_order.str() + " over cap";
    }
    rec.oracles.push_back(comp);

    if (group_order <= budgets.group) {
      auto ex = extract_extension(WreathInstanceSpec(ext.module().n(), ext.module().q()), budgets.group);
      if (!ex.kernel_is_full)
        rec.notes.push_back("block kernel has order " + std::to_string(ex.kernel_order) +
                            ", a proper submodule of A");
    } else {
      rec.notes.push_back("reconstruction skipped: |G| = " + group_order.str() + " over cap");
    }
  }

  for (auto const &o : rec.oracles)
    if (o.split && *o.split != decided)
      rec.failures.push_back(o.name + " oracle disagrees with the decided verdict");
}

} // namespace

Record analyze_extension(ExtensionData const &ext, InstanceBudgets const &budgets,
                         bool wreath_family)
{
  auto const start = Clock::now();
  Record rec;
  rec.n = ext.module().n();
  rec.q = ext.module().q();
  rec.instance = wreath_family ? "wreath" : "module";
  try {
    auto verdict = decide_split(ext);
    if (auto const *split = std::get_if<Split>(&verdict)) {
      rec.verdict = Verdict::split;
      for (auto const &a : split->section)
        rec.section.push_back(a.to_std());
      if (auto const &real = ext.realization())
        for (std::size_t s = 0; s < split->section.size(); ++s) {
          auto t = translation_permutation({split->section[s]}, real->blocks);
          rec.permutations.push_back(compose(real->generators[s], t).images());
        }
      rec.verified = split->section_check.passed();
      for (auto const &f : section_failures(split->section_check))
        rec.failures.push_back("section check: " + f);
      if (split->section_obstruction) {
        rec.section_obstruction = split->section_obstruction->to_std();
        rec.notes.push_back("system solvable, but no solution satisfies far commutation");
      }
    } else {
      rec.verdict = Verdict::nonsplit;
      rec.certificate = std::get<NonSplit>(verdict).certificate.to_std();
      rec.verified = verify_verdict(ext, verdict);
      if (!rec.verified)
        rec.failures.push_back("certificate does not annihilate the system");
    }
    if (wreath_family && rec.n >= 3 && rec.q % 4 != 0) {
      auto a = rec.q % 2 == 1 ? case1_solution(rec.n, rec.q) : case2_solution(rec.n, rec.q);
      for (auto const &as : a)
        rec.constructed_section.push_back(as.to_std());
      for (auto const &f : section_failures(verify_section(ext, a)))
        rec.failures.push_back("closed-form section check: " + f);
    }
    if (wreath_family && (rec.verdict == Verdict::split) != (rec.q % 4 != 0))
      rec.failures.push_back("verdict deviates from the dichotomy");
    run_oracles(rec, ext, budgets, wreath_family);
  } catch (ResourceError const &e) {
    rec.failures.push_back(std::string("budget exceeded: ") + e.what());
  } catch (Error const &e) {
    rec.failures.push_back(e.what());
  }
  rec.timing_ms = elapsed_ms(start);
  return rec;
}

Record analyze_wreath(std::size_t n, std::int64_t q, InstanceBudgets const &budgets)
{
  return analyze_extension(wreath_extension({n, q}), budgets, true);
}

Report cmd_analyze(RunConfig const &config)
{
  auto const start = Clock::now();
  Report report;
  report.command = to_string(Command::analyze);
  InstanceBudgets budgets{config.budget_lifts, config.budget_group};
  if (config.module_file)
    report.records.push_back(analyze_extension(load_module_file(*config.module_file), budgets, false));
  else
    report.records.push_back(analyze_wreath(config.ns.at(0), config.qs.at(0), budgets));
  report.finalize();
  report.timing_ms = elapsed_ms(start);
  return report;
}

Report cmd_sweep(RunConfig const &config)
{
  auto const start = Clock::now();
  std::vector<std::pair<std::size_t, std::int64_t>> instances;
  for (auto n : config.ns)
    for (auto q : config.qs)
      instances.emplace_back(n, q);
  std::ranges::sort(instances);

  Report report;
  report.command = to_string(config.command);
  report.records.resize(instances.size());
  InstanceBudgets budgets{config.budget_lifts, config.budget_group};

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++)
      report.records[i] = analyze_wreath(instances[i].first, instances[i].second, budgets);
  };
  std::size_t const count = std::max<std::size_t>(1, std::min(config.workers, instances.size()));
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < count; ++w)
    pool.emplace_back(worker);
  worker();
  pool.clear();

  report.finalize();
  report.timing_ms = elapsed_ms(start);
  return report;
}

Report cmd_verify_paper(RunConfig const &config)
{
  auto const start = Clock::now();
  RunConfig cfg = config;
  cfg.command = Command::verify_paper;
  if (cfg.ns.empty())
    for (std::size_t n = 3; n <= 5; ++n)
      cfg.ns.push_back(n);
  if (cfg.qs.empty())
    for (std::int64_t q = 1; q <= 12; ++q)
      cfg.qs.push_back(q);

  Report report = cmd_sweep(cfg);
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  for (auto n : cfg.ns)
    for (auto q : cfg.qs) {
      auto const tag = label(n, q);
      auto ext = wreath_extension({n, q});
      auto const &mod = ext.module();

      // Identity suite.
      std::string bad;
      for (std::size_t s = 1; s < n; ++s)
        if (!(mod.action(s) * f_bar(n, q, s) == f_bar(n, q, s)))
          bad += " iota_s f_s != f_s at s=" + std::to_string(s) + ";";
      for (std::size_t r = 1; r + 1 < n; ++r) {
        auto I = operator_I(mod, r);
        auto rhs = f_bar(n, q, r) + f_bar(n, q, r + 1) + g_bar(n, q, r);
        if (!(I * f_bar(n, q, r) == rhs) || !(I * f_bar(n, q, r + 1) == rhs))
          bad += " I(f_r), I(f_r+1), f_r + f_r+1 + g_r differ at r=" + std::to_string(r) + ";";
      }
      BigInt expected = 1;
      for (std::size_t i = 0; i < n; ++i)
        expected *= q;
      if (q % 2 == 0)
        expected /= 2;
      if (mod.order() != expected)
        bad += " |A| = " + mod.order().str() + ", expected " + expected.str() + ";";
      add("identities " + tag, bad.empty(), bad);

      if (q % 2 == 1) {
        auto a = case1_solution(n, q);
        auto rep = verify_section(ext, a);
        bool const solves = solves_system(ext, a);
        std::string detail = solves ? "" : "does not solve the system; ";
        for (auto const &f : section_failures(rep))
          detail += f + "; ";
        add("case 1 " + tag, solves && rep.passed(), detail);
      }
      if (q % 4 == 2) {
        auto display = case2_mod2_display(n);
        auto ext2 = wreath_extension({n, 2});
        std::string detail;
        for (auto const &f : section_failures(verify_section(ext2, display)))
          detail += f + "; ";
        add("case 2 mod-2 display " + tag, solves_system(ext2, display), detail);
        auto a = case2_solution(n, q);
        detail.clear();
        for (auto const &f : section_failures(verify_section(ext, a)))
          detail += f + "; ";
        add("case 2 CRT solution " + tag, solves_system(ext, a), detail);
      }

      auto congr = case3_congruences(n, q);
      bool found = false;
      for (std::int64_t x1 = 0; x1 < q && !found; ++x1)
        for (std::int64_t x2 = 0; x2 < q && !found; ++x2)
          for (std::int64_t y = 0; y < q && !found; ++y)
            found = congr.satisfied_by(x1, x2, y);
      auto out = case3_obstruction(n, q);
      bool const consistent = is_solvable(out) == found && found == (q % 4 != 0) &&
                              verify_outcome(congr.matrix, congr.rhs, out);
      add("case 3 congruences " + tag, consistent,
          consistent ? "" : "solver, exhaustive search and 4 | q disagree");
    }

  report.finalize();
  report.timing_ms = elapsed_ms(start);
  return report;
}

Report run_command(RunConfig const &config)
{
  switch (config.command) {
  case Command::analyze: return cmd_analyze(config);
  case Command::sweep: return cmd_sweep(config);
  case Command::verify_paper: return cmd_verify_paper(config);
  }
  throw DomainError("unknown command");
}

int run_main(int argc, char const *const *argv, std::ostream &out, std::ostream &err)
{
  RunConfig config;
  Report report;
  try {
    config = parse_command_line(argc, argv);
    report = run_command(config);
  } catch (Error const &e) {
    err << "braidsplit: " << e.what() << '\n';
    return 2;
  }

  if (config.format == OutputFormat::json)
    write_json(out, report);
  else
    write_text(out, report);
  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) {
      err << "braidsplit: cannot write " << config.out->string() << '\n';
      return 2;
    }
    write_json(file, report);
  }
  return report.ok() ? 0 : 1;
}

} // namespace braidsplit::cli
