#pragma once

#include <cstdint>
#include <vector>

#include "braidsplit/residue.hpp"

namespace braidsplit {

struct PrimePowerFactor
{
  std::int64_t prime;
  int exponent;
  std::int64_t modulus; // prime^exponent

  friend bool operator==(PrimePowerFactor const &, PrimePowerFactor const &) = default;
};

// Prime-power factorization of q >= 2, primes increasing.
std::vector<PrimePowerFactor> crt_split(std::int64_t q);

// Unique vector modulo the product of the (pairwise coprime) input moduli
// that reduces to each input.
ResidueVector crt_combine(std::vector<ResidueVector> const &parts);

} // namespace braidsplit
