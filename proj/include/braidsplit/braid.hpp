#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "braidsplit/error.hpp"
#include "braidsplit/permutation.hpp"
#include "braidsplit/residue.hpp"

namespace braidsplit {

// Word in the Artin generators: letter +s is sigma_s, -s its inverse (1-based).
class BraidWord
{
public:
  BraidWord(std::size_t strands, std::vector<int> letters);

  std::size_t strands() const noexcept { return strands_; }
  std::vector<int> const &letters() const noexcept { return letters_; }

private:
  std::size_t strands_;
  std::vector<int> letters_;
};

/// True iff g_s g_{s+1} g_s = g_{s+1} g_s g_{s+1} for adjacent generators and
/// g_s g_t = g_t g_s whenever |s - t| >= 2.
template <typename T, typename Compose, typename Equal = std::equal_to<>>
bool check_braid_relations(std::span<T const> gens, Compose compose, Equal equal = {})
{
  if (gens.empty())
    throw DomainError("check_braid_relations: no generators");
  for (std::size_t s = 0; s + 1 < gens.size(); ++s) {
    auto const &a = gens[s];
    auto const &b = gens[s + 1];
    if (!equal(compose(compose(a, b), a), compose(compose(b, a), b)))
      return false;
  }
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::size_t t = s + 2; t < gens.size(); ++t)
      if (!equal(compose(gens[s], gens[t]), compose(gens[t], gens[s])))
        return false;
  return true;
}

inline bool check_braid_relations(std::vector<Permutation> const &gens)
{
  return check_braid_relations(std::span<Permutation const>(gens),
                               [](auto const &a, auto const &b) { return compose(a, b); });
}

inline bool check_braid_relations(std::vector<ResidueMatrix> const &gens)
{
  return check_braid_relations(std::span<ResidueMatrix const>(gens),
                               [](auto const &a, auto const &b) { return a * b; });
}

// Evaluation of braid words in a permutation group; the generators are
// checked against the braid relations once, on construction.
class BraidEvaluator
{
public:
  explicit BraidEvaluator(std::vector<Permutation> gens);

  Permutation evaluate(BraidWord const &word) const;

private:
  std::vector<Permutation> gens_;
  std::vector<Permutation> inverses_;
};

Permutation evaluate_braid_word(BraidWord const &word, std::vector<Permutation> const &gens);

} // namespace braidsplit
