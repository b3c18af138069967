#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "braidsplit/perm_group.hpp"
#include "braidsplit/sigma_module.hpp"
#include "braidsplit/solve.hpp"

namespace braidsplit {

// The wreath-type braid representation on q*n points (x, t), point t*q + x.
// Generator g_s (1-based) sends (x, s-1) -> (x, s) and (x, s) -> (x+1, s-1)
// in 0-based block indices and fixes everything else.
struct WreathInstanceSpec
{
  std::size_t n;
  std::int64_t q;

  WreathInstanceSpec(std::size_t n, std::int64_t q);

  std::size_t degree() const noexcept { return n * static_cast<std::size_t>(q); }
  // q/2 for even q.
  std::optional<std::int64_t> half_modulus() const;
};

std::vector<Permutation> build_wreath_group(WreathInstanceSpec const &spec,
                                            std::size_t cap = default_group_cap);
BlockMap wreath_blocks(WreathInstanceSpec const &spec);
Realization wreath_realization(WreathInstanceSpec const &spec);

// Named elements of (Z/q)^n, 1-based indices.
ResidueVector f_bar(std::size_t n, std::int64_t q, std::size_t s); // e_s + e_{s+1}
ResidueVector g_bar(std::size_t n, std::int64_t q, std::size_t r); // e_r + e_{r+2}
ResidueVector h_bar(std::size_t n, std::int64_t q, std::size_t j); // 2 e_j

// Coordinate transpositions acting on (Z/q)^n; A generated by f_1..f_{n-1}, h_n.
SigmaModule an_sigma_module(std::size_t n, std::int64_t q);

// Closed-form extension data (module, f_s = f_bar_s) with the permutation
// realization attached. Needs no group closure.
ExtensionData wreath_extension(WreathInstanceSpec const &spec);

struct ExtractedExtension
{
  ExtensionData data;
  std::size_t group_order;
  std::size_t kernel_order;
  // Kernel equals A_n(q). Fails for n = 2 and q > 2, where the group is
  // cyclic of order 2q and the kernel is <f_1>.
  bool kernel_is_full;
};

/// Recovers the extension from the permutation group itself: kernel of the
/// block projection, actions by conjugating ambient translations, f_s from
/// g_s^2. Throws InvariantViolation if the actions or f_s differ from the
/// closed form.
ExtractedExtension extract_extension(WreathInstanceSpec const &spec,
                                     std::size_t cap = default_group_cap);

// a_s = -(1/2) f_s for odd q.
std::vector<ResidueVector> case1_solution(std::size_t n, std::int64_t q);

// a_r = sum_{t=r}^{n-2} f_t (r <= n-3), a_{n-2} = f_{n-1}, a_{n-1} = f_{n-2}, mod 2.
std::vector<ResidueVector> case2_mod2_display(std::size_t n);

// CRT of case1_solution(n, q/2) with case2_mod2_display(n), q = 2 (mod 4).
std::vector<ResidueVector> case2_solution(std::size_t n, std::int64_t q);

// 2 x1 + x2 + 1 = 0 and 2 (-1)^{n-1} x2 + 4 y = 0 (mod q), unknowns (x1, x2, y).
struct Case3Congruences
{
  std::size_t n;
  std::int64_t q;
  ResidueMatrix matrix;
  ResidueVector rhs;

  bool satisfied_by(std::int64_t x1, std::int64_t x2, std::int64_t y) const;
};

Case3Congruences case3_congruences(std::size_t n, std::int64_t q);
SolveOutcome case3_obstruction(std::size_t n, std::int64_t q);

} // namespace braidsplit
