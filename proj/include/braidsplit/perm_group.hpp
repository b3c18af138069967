#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "braidsplit/permutation.hpp"
#include "braidsplit/residue.hpp"

namespace braidsplit {

inline constexpr std::size_t default_group_cap = 10'000'000;

// A finite permutation group held as its full element list.
class PermutationGroup
{
public:
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::vector<Permutation> const &generators() const noexcept { return generators_; }
  // Breadth-first discovery order; element 0 is the identity.
  std::vector<Permutation> const &elements() const noexcept { return elements_; }
  bool contains(Permutation const &p) const { return index_.contains(p); }

private:
  friend std::optional<PermutationGroup> try_generate(std::vector<Permutation> const &,
                                                      std::size_t);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

// Closure of the generators; nullopt as soon as more than `cap` elements appear.
std::optional<PermutationGroup> try_generate(std::vector<Permutation> const &gens,
                                             std::size_t cap = default_group_cap);

// As try_generate, but exceeding the cap is a ResourceError.
PermutationGroup generate(std::vector<Permutation> const &gens,
                          std::size_t cap = default_group_cap);

// Partition of the points into n blocks.
class BlockMap
{
public:
  explicit BlockMap(std::vector<std::uint32_t> block_of);

  // n blocks of `block_size` consecutive points: point t*size + x lies in block t.
  static BlockMap uniform(std::size_t n, std::size_t block_size);

  std::size_t degree() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return n_; }
  std::uint32_t block_of(Point x) const { return block_of_[x]; }
  std::vector<std::uint32_t> const &blocks() const noexcept { return block_of_; }

private:
  std::size_t n_;
  std::vector<std::uint32_t> block_of_;
};

// Induced permutation of the blocks. StructureError if g breaks a block.
Permutation block_projection(Permutation const &g, BlockMap const &blocks);

// Elements of G acting trivially on the blocks.
std::vector<Permutation> kernel(PermutationGroup const &group, BlockMap const &blocks);

// Shift constants of a kernel element acting on each block (x, t) -> (x + v_t, t)
// under the labeling point = t*q + x.
struct TranslationVector
{
  ResidueVector shifts;

  friend bool operator==(TranslationVector const &, TranslationVector const &) = default;
};

TranslationVector decode_translation(Permutation const &k, BlockMap const &blocks,
                                     std::int64_t q);

// The permutation (x, t) -> (x + v_t, t).
Permutation translation_permutation(TranslationVector const &v, BlockMap const &blocks);

// decode_translation(g k g^-1).
TranslationVector conjugation_action(Permutation const &g, Permutation const &k,
                                     BlockMap const &blocks, std::int64_t q);

} // namespace braidsplit
