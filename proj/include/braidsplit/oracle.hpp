#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidsplit/perm_group.hpp"
#include "braidsplit/sigma_module.hpp"

namespace braidsplit {

inline constexpr std::uint64_t default_lift_budget = 10'000'000;
inline constexpr std::size_t default_complement_cap = 10'000;
inline constexpr std::uint64_t default_complement_tuples = 1'000'000;

// Elements of A, ordered lexicographically by their coefficient vectors
// against the submodule generators (first occurrence wins).
std::vector<ResidueVector> enumerate_submodule(SigmaModule const &module);

struct LiftSearchOptions
{
  std::uint64_t budget = default_lift_budget;
  // Relabels the enumeration of A with a seeded shuffle.
  std::optional<std::uint64_t> shuffle_seed;
};

struct LiftSearchResult
{
  // |A|^{n-1}: every tuple is covered, pruned prefixes included.
  std::uint64_t searched = 0;
  // Tuples passing involution, adjacent braid and far-commutation checks.
  std::uint64_t witnesses = 0;
  // Tuples passing the involution and adjacent braid checks only.
  std::uint64_t system_witnesses = 0;
  std::optional<std::vector<ResidueVector>> first_witness;
};

/// Exhaustive search over A^{n-1} for lifts a_s making g_s a_s a set of
/// Coxeter generators. Throws ResourceError when |A|^{n-1} exceeds the budget.
LiftSearchResult brute_force_lifts(ExtensionData const &ext, LiftSearchOptions options = {});

struct ComplementSearchResult
{
  // Involutions h_1..h_{n-1}, h_s over the transposition (s, s+1), generating
  // a subgroup of order n! meeting the kernel trivially.
  std::optional<std::vector<Permutation>> found;
  std::uint64_t tuples_tried = 0;
};

ComplementSearchResult complement_search(PermutationGroup const &group, BlockMap const &blocks,
                                         std::size_t cap = default_complement_cap,
                                         std::uint64_t tuple_budget = default_complement_tuples);

struct CrossValidationOptions
{
  std::uint64_t lift_budget = default_lift_budget;
  std::size_t complement_cap = default_complement_cap;
  std::size_t group_cap = default_group_cap;
};

struct CrossValidationRow
{
  std::size_t n;
  std::int64_t q;
  bool decided_split;
  std::optional<bool> lifts_split;
  std::optional<bool> complement_split;
  std::string skipped; // why an oracle did not run
  bool agree;
};

struct CrossValidationReport
{
  std::vector<CrossValidationRow> rows;

  bool all_agree() const;
};

CrossValidationReport cross_validate(std::vector<std::size_t> const &ns,
                                     std::vector<std::int64_t> const &qs,
                                     CrossValidationOptions const &options = {});

} // namespace braidsplit
