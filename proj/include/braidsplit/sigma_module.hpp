#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "braidsplit/integer_matrix.hpp"
#include "braidsplit/perm_group.hpp"
#include "braidsplit/residue.hpp"

namespace braidsplit {

/// A Sigma_n-module A <= (Z/q)^m given by the actions iota_1..iota_{n-1} of the
/// Coxeter generators on the ambient module and the rows generating A.
///
/// Construction checks iota_s^2 = 1, the braid and far-commutation identities,
/// and that every iota_s maps A into itself; any failure is an
/// InvariantViolation.
class SigmaModule
{
public:
  SigmaModule(std::size_t n, std::int64_t q, std::vector<ResidueMatrix> actions,
              ResidueMatrix submodule_gens);

  std::size_t n() const noexcept { return n_; }
  std::int64_t q() const noexcept { return q_; }
  Index rank() const noexcept { return rank_; }
  Index generator_count() const noexcept { return gens_.rows(); }

  // iota_s, 1 <= s <= n-1.
  ResidueMatrix const &action(std::size_t s) const;
  std::vector<ResidueMatrix> const &actions() const noexcept { return actions_; }
  ResidueMatrix const &submodule_gens() const noexcept { return gens_; }

  // m x k matrix whose columns are the generators.
  ResidueMatrix const &generator_columns() const noexcept { return columns_; }

  // Element with the given coefficients against the generators.
  ResidueVector element(ResidueVector const &coeffs) const;
  bool contains(ResidueVector const &a) const;
  // Some coefficient vector expressing a, if a lies in A.
  std::optional<ResidueVector> coordinates(ResidueVector const &a) const;

  // |A|
  BigInt order() const;

private:
  std::size_t n_;
  std::int64_t q_;
  Index rank_;
  std::vector<ResidueMatrix> actions_;
  ResidueMatrix gens_;
  ResidueMatrix columns_;
};

// A = B as subgroups of the same ambient module.
bool same_submodule(SigmaModule const &a, SigmaModule const &b);

// J_s = iota_s + 1
ResidueMatrix operator_J(SigmaModule const &module, std::size_t s);

// I_{r,r+1} = iota_r iota_{r+1} iota_r + iota_r + iota_{r+1}
ResidueMatrix operator_I(SigmaModule const &module, std::size_t r);

// Permutation model of the group: braid generators g_s on q*n points with
// A realized as block translations.
struct Realization
{
  std::vector<Permutation> generators;
  BlockMap blocks;
  std::int64_t q;
};

/// The extension 0 -> A -> G -> Sigma_n -> 1 as seen by the splitting
/// problem: the module plus f_s = g_s^2 in A.
class ExtensionData
{
public:
  ExtensionData(SigmaModule module, std::vector<ResidueVector> f,
                std::optional<Realization> realization = std::nullopt);

  SigmaModule const &module() const noexcept { return module_; }
  std::vector<ResidueVector> const &f() const noexcept { return f_; }
  ResidueVector const &f(std::size_t s) const;
  std::optional<Realization> const &realization() const noexcept { return realization_; }

private:
  SigmaModule module_;
  std::vector<ResidueVector> f_;
  std::optional<Realization> realization_;
};

} // namespace braidsplit
