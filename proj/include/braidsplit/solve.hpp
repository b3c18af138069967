#pragma once

#include <variant>
#include <vector>

#include "braidsplit/residue.hpp"

namespace braidsplit {

struct Solution
{
  ResidueVector particular;
  // Generators of {x : M x = 0 (mod q)} as an additive group.
  std::vector<ResidueVector> kernel_basis;
};

struct Insolvable
{
  // u with u^T M = 0 and u^T b != 0 (mod q).
  ResidueVector certificate;
};

using SolveOutcome = std::variant<Solution, Insolvable>;

inline bool is_solvable(SolveOutcome const &o)
{
  return std::holds_alternative<Solution>(o);
}

/// Solves M x = b over Z/(q) through the Smith form of the integer matrix
/// [M | qI]. The particular solution sets every free parameter to zero.
SolveOutcome solve_mod(ResidueMatrix const &m, ResidueVector const &b);

/// Rechecks the defining identities of an outcome against (M, b): residual
/// and kernel identities for a Solution, the annihilator identities for an
/// Insolvable. Does not re-derive completeness of the kernel basis.
bool verify_outcome(ResidueMatrix const &m, ResidueVector const &b,
                    SolveOutcome const &outcome);

} // namespace braidsplit
