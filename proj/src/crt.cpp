#include "braidsplit/crt.hpp"

#include <numeric>
#include <string>

#include "braidsplit/error.hpp"

namespace braidsplit {

std::vector<PrimePowerFactor> crt_split(std::int64_t q)
{
  if (q < 2)
    throw DomainError("crt_split requires q >= 2, got " + std::to_string(q));
  std::vector<PrimePowerFactor> out;
  std::int64_t rest = q;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0)
      continue;
    PrimePowerFactor f{p, 0, 1};
    while (rest % p == 0) {
      rest /= p;
      ++f.exponent;
      f.modulus *= p;
    }
    out.push_back(f);
  }
  if (rest > 1)
    out.push_back({rest, 1, rest});
  return out;
}

ResidueVector crt_combine(std::vector<ResidueVector> const &parts)
{
  if (parts.empty())
    throw DomainError("crt_combine of no factors");
  Index const len = parts.front().size();

  std::int64_t modulus = 1;
  Int64Vector acc = Int64Vector::Zero(len);
  for (auto const &part : parts) {
    if (part.size() != len)
      throw DimensionMismatch("crt_combine: vectors of unequal length");
    std::int64_t const m = part.modulus();
    if (std::gcd(modulus, m) != 1)
      throw DomainError("crt_combine: moduli " + std::to_string(modulus) + " and " +
                        std::to_string(m) + " are not coprime");
    std::int64_t const next = modulus * m;
    check_modulus(next);
    // acc + modulus * t = part (mod m), t = (part - acc) * modulus^{-1} (mod m).
    std::int64_t const inv = *inverse_mod(modulus, m);
    for (Index i = 0; i < len; ++i) {
      std::int64_t t = reduce_mod((part[i] - acc(i)) % m * inv, m);
      acc(i) = reduce_mod(acc(i) + modulus * t, next);
    }
    modulus = next;
  }
  return ResidueVector(acc, modulus);
}

} // namespace braidsplit
