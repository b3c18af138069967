#include "braidsplit/perm_group.hpp"

#include <string>

#include "braidsplit/error.hpp"

namespace braidsplit {

std::optional<PermutationGroup> try_generate(std::vector<Permutation> const &gens,
                                             std::size_t cap)
{
  if (gens.empty())
    throw DomainError("generate: empty generator list");
  std::size_t const degree = gens.front().degree();
  for (auto const &g : gens)
    if (g.degree() != degree)
      throw DimensionMismatch("generate: generators of unequal degree");

  PermutationGroup group;
  group.degree_ = degree;
  group.generators_ = gens;

  auto insert = [&group](Permutation p) {
    auto [it, fresh] = group.index_.try_emplace(p, group.elements_.size());
    if (fresh)
      group.elements_.push_back(std::move(p));
    return fresh;
  };

  insert(Permutation::identity(degree));
  // Finite group: closing under right multiplication by generators suffices.
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (auto const &g : gens) {
      if (insert(compose(group.elements_[head], g)) && group.elements_.size() > cap)
        return std::nullopt;
    }
  }
  return group;
}

PermutationGroup generate(std::vector<Permutation> const &gens, std::size_t cap)
{
  auto group = try_generate(gens, cap);
  if (!group)
    throw ResourceError("group closure exceeded the cap of " + std::to_string(cap) +
                          " elements",
                        cap);
  return std::move(*group);
}

// ---------------------------------------------------------------------------

BlockMap::BlockMap(std::vector<std::uint32_t> block_of) : n_(0), block_of_(std::move(block_of))
{
  for (auto b : block_of_)
    n_ = std::max<std::size_t>(n_, b + 1u);
  std::vector<bool> used(n_, false);
  for (auto b : block_of_)
    used[b] = true;
  for (std::size_t b = 0; b < n_; ++b)
    if (!used[b])
      throw DomainError("block map skips block " + std::to_string(b));
}

BlockMap BlockMap::uniform(std::size_t n, std::size_t block_size)
{
  std::vector<std::uint32_t> of(n * block_size);
  for (std::size_t p = 0; p < of.size(); ++p)
    of[p] = static_cast<std::uint32_t>(p / block_size);
  return BlockMap(std::move(of));
}

Permutation block_projection(Permutation const &g, BlockMap const &blocks)
{
  if (g.degree() != blocks.degree())
    throw DimensionMismatch("block_projection: degree mismatch");
  std::size_t const n = blocks.block_count();
  std::vector<std::int64_t> image(n, -1);
  for (Point x = 0; x < g.degree(); ++x) {
    auto from = blocks.block_of(x);
    auto to = static_cast<std::int64_t>(blocks.block_of(g[x]));
    if (image[from] == -1)
      image[from] = to;
    else if (image[from] != to)
      throw StructureError("permutation splits block " + std::to_string(from));
  }
  std::vector<Point> im(n);
  for (std::size_t b = 0; b < n; ++b)
    im[b] = static_cast<Point>(image[b]);
  try {
    return Permutation(std::move(im));
  } catch (DomainError const &) {
    throw StructureError("permutation merges blocks");
  }
}

std::vector<Permutation> kernel(PermutationGroup const &group, BlockMap const &blocks)
{
  for (auto const &g : group.generators())
    block_projection(g, blocks);
  std::vector<Permutation> out;
  for (auto const &e : group.elements())
    if (block_projection(e, blocks).is_identity())
      out.push_back(e);
  return out;
}

namespace {

void check_labeling(BlockMap const &blocks, std::int64_t q)
{
  check_modulus(q);
  auto const size = static_cast<std::size_t>(q);
  if (blocks.degree() != blocks.block_count() * size)
    throw StructureError("block map is not n blocks of size q = " + std::to_string(q));
  for (Point p = 0; p < blocks.degree(); ++p)
    if (blocks.block_of(p) != p / size)
      throw StructureError("block map does not follow the point = t*q + x labeling");
}

} // namespace

TranslationVector decode_translation(Permutation const &k, BlockMap const &blocks,
                                     std::int64_t q)
{
  check_labeling(blocks, q);
  if (k.degree() != blocks.degree())
    throw DimensionMismatch("decode_translation: degree mismatch");
  auto const n = static_cast<Index>(blocks.block_count());
  Int64Vector shifts(n);
  for (Index t = 0; t < n; ++t) {
    auto const base = static_cast<Point>(t * q);
    Point first = k[base];
    if (blocks.block_of(first) != t)
      throw StructureError("element moves block " + std::to_string(t));
    std::int64_t c = first - base;
    for (std::int64_t x = 0; x < q; ++x) {
      auto expect = static_cast<Point>(base + reduce_mod(x + c, q));
      if (k[static_cast<Point>(base + x)] != expect)
        throw StructureError("element is not a uniform shift on block " +
                             std::to_string(t));
    }
    shifts(t) = c;
  }
  return {ResidueVector(shifts, q)};
}

Permutation translation_permutation(TranslationVector const &v, BlockMap const &blocks)
{
  std::int64_t const q = v.shifts.modulus();
  check_labeling(blocks, q);
  if (static_cast<std::size_t>(v.shifts.size()) != blocks.block_count())
    throw DimensionMismatch("translation length differs from block count");
  std::vector<Point> im(blocks.degree());
  for (Index t = 0; t < v.shifts.size(); ++t)
    for (std::int64_t x = 0; x < q; ++x)
      im[static_cast<std::size_t>(t * q + x)] =
        static_cast<Point>(t * q + reduce_mod(x + v.shifts[t], q));
  return Permutation(std::move(im));
}

TranslationVector conjugation_action(Permutation const &g, Permutation const &k,
                                     BlockMap const &blocks, std::int64_t q)
{
  return decode_translation(conjugate(g, k), blocks, q);
}

} // namespace braidsplit
