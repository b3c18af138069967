#pragma once

#include <ostream>

#include "braidsplit/cli/config.hpp"
#include "braidsplit/cli/report.hpp"
#include "braidsplit/sigma_module.hpp"

namespace braidsplit::cli {

struct InstanceBudgets
{
  std::uint64_t lifts = default_lift_budget;
  std::size_t group = default_cli_group_budget;
};

/// Decides one extension, rechecks the verdict and runs whichever oracles fit
/// the budgets. Errors become record failures.
Record analyze_extension(ExtensionData const &ext, InstanceBudgets const &budgets,
                         bool wreath_family);
Record analyze_wreath(std::size_t n, std::int64_t q, InstanceBudgets const &budgets);

Report cmd_analyze(RunConfig const &config);
Report cmd_sweep(RunConfig const &config);
Report cmd_verify_paper(RunConfig const &config);
Report run_command(RunConfig const &config);

// Full program: parse, run, print. Returns the exit status
// (0 no failures, 1 failures, 2 usage or input error).
int run_main(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace braidsplit::cli
