#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "braidsplit/residue.hpp"
#include "braidsplit/sigma_module.hpp"

namespace braidsplit {

struct SystemLayout
{
  std::size_t n = 0;
  Index block_height = 0; // ambient rank m
  Index unknown_width = 0; // generator count k: a_s = G^T x_s
  std::size_t j_blocks = 0;
  std::size_t i_blocks = 0;
  std::size_t far_blocks = 0;
};

/// Block system in the submodule coordinates x_1..x_{n-1} of a_1..a_{n-1}:
/// block row s encodes J_s(a_s) = -f_s, block row (n-1)+r encodes
/// I_{r,r+1}(a_r - a_{r+1}) = 0. The extended variant appends one block row
/// iota_t(a_s) + a_t = iota_s(a_t) + a_s per pair |s - t| >= 2.
struct SplitSystem
{
  ResidueMatrix matrix;
  ResidueVector rhs;
  SystemLayout layout;

  // a_1..a_{n-1} in ambient coordinates from a vector of unknowns.
  std::vector<ResidueVector> section_from(ResidueVector const &unknowns,
                                          SigmaModule const &module) const;
};

SplitSystem assemble_split_system(ExtensionData const &ext);

// assemble_split_system plus the far-commutation rows.
SplitSystem assemble_coxeter_system(ExtensionData const &ext);

struct FarPairCheck
{
  std::size_t s;
  std::size_t t;
  bool holds;
};

struct SectionReport
{
  // f_s + iota_s(a_s) + a_s = 0
  std::vector<bool> involution;
  // iota_r iota_{r+1}(a_r) + iota_r(a_{r+1}) + a_r
  //   = iota_{r+1} iota_r(a_{r+1}) + iota_{r+1}(a_r) + a_{r+1}
  std::vector<bool> adjacent;
  // iota_t(a_s) + a_t = iota_s(a_t) + a_s
  std::vector<FarPairCheck> far;
  // Coxeter relations of the permutations g_s * a_s, when a realization exists.
  std::optional<bool> realized;

  bool system_conditions() const;
  bool far_commutation() const;
  bool passed() const;
};

SectionReport verify_section(ExtensionData const &ext, std::vector<ResidueVector> const &a);

struct Split
{
  std::vector<ResidueVector> section;
  SectionReport section_check;
  // Set when the system is solvable but no solution satisfies far
  // commutation: an annihilator of the extended Coxeter system.
  std::optional<ResidueVector> section_obstruction;
};

struct NonSplit
{
  ResidueVector certificate;
};

using SplitVerdict = std::variant<Split, NonSplit>;

inline bool is_split(SplitVerdict const &v) { return std::holds_alternative<Split>(v); }

/// Splitting decision: solvability of the J/I system. A Split verdict holds
/// the canonical solution, or, when that one fails far commutation, a
/// solution of the extended system if there is one.
SplitVerdict decide_split(ExtensionData const &ext);

// Independent recheck of a verdict: Split sections pass verify_section, NonSplit
// certificates annihilate the assembled system.
bool verify_verdict(ExtensionData const &ext, SplitVerdict const &verdict);

} // namespace braidsplit
