#include <doctest.h>

#include <random>

#include "braidsplit/error.hpp"
#include "braidsplit/perm_group.hpp"
#include "braidsplit/wreath.hpp"

using namespace braidsplit;

namespace {

std::vector<Permutation> adjacent_transpositions(std::size_t n)
{
  std::vector<Permutation> out;
  for (Point s = 0; s + 1 < n; ++s)
    out.push_back(Permutation::transposition(n, s, s + 1));
  return out;
}

std::uint64_t factorial(std::size_t n)
{
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// Pointwise: apply a permutation to a point twice through its image array.
Point apply_twice(Permutation const &g, Point x) { return g[g[x]]; }

} // namespace

TEST_CASE("permutation construction and composition")
{
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation({0, 3}), DomainError);

  Permutation p{1, 2, 0};
  CHECK(compose(Permutation::identity(3), p) == p);
  CHECK(compose(p, p.inverse()).is_identity());

  // Right factor first: (0 1)∘(1 2) sends 0->1, 1->2, 2->0.
  auto a = Permutation::transposition(3, 0, 1);
  auto b = Permutation::transposition(3, 1, 2);
  CHECK(compose(a, b) == Permutation({1, 2, 0}));
  for (Point x = 0; x < 3; ++x)
    CHECK(compose(a, b)[x] == a[b[x]]);

  CHECK_THROWS_AS(compose(a, Permutation::identity(4)), DimensionMismatch);
}

TEST_CASE("generate")
{
  CHECK(generate(adjacent_transpositions(3)).order() == 6);
  CHECK(generate(adjacent_transpositions(5)).order() == 120);

  Permutation cycle{1, 2, 3, 4, 5, 6, 0};
  CHECK(generate({cycle}).order() == 7);

  auto wreath = generate(build_wreath_group({3, 2}));
  CHECK(wreath.order() == 24);

  CHECK_THROWS_AS(generate({}), DomainError);
  CHECK_THROWS_AS(generate(adjacent_transpositions(5), 100), ResourceError);
  try {
    generate(adjacent_transpositions(5), 100);
  } catch (ResourceError const &e) {
    CHECK(e.cap() == 100);
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
}

TEST_CASE("generate: group axioms on samples")
{
  for (auto [n, q] : {std::pair<std::size_t, std::int64_t>{3, 3}, {4, 2}, {3, 4}}) {
    auto group = generate(build_wreath_group({n, q}));
    CHECK(factorial(n * static_cast<std::size_t>(q)) % group.order() == 0);
    CHECK(group.contains(Permutation::identity(group.degree())));
    std::mt19937 rng(static_cast<unsigned>(n * 100 + q));
    std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
    for (int i = 0; i < 50; ++i) {
      auto const &g = group.elements()[pick(rng)];
      auto const &h = group.elements()[pick(rng)];
      CHECK(group.contains(g.inverse()));
      CHECK(group.contains(compose(g, h)));
    }
  }
}

TEST_CASE("block_projection")
{
  WreathInstanceSpec spec(3, 2);
  auto gens = build_wreath_group(spec);
  auto blocks = wreath_blocks(spec);

  CHECK(block_projection(gens[0], blocks) == Permutation::transposition(3, 0, 1));
  CHECK(block_projection(Permutation::identity(6), blocks).is_identity());
  CHECK(block_projection(compose(gens[0], gens[0]), blocks).is_identity());

  // Swaps points 0 and 2: splits block 0.
  CHECK_THROWS_AS(block_projection(Permutation::transposition(6, 0, 2), blocks), StructureError);
}

TEST_CASE("block_projection is a homomorphism on samples")
{
  WreathInstanceSpec spec(4, 3);
  auto group = generate(build_wreath_group(spec));
  auto blocks = wreath_blocks(spec);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  for (int i = 0; i < 200; ++i) {
    auto const &g = group.elements()[pick(rng)];
    auto const &h = group.elements()[pick(rng)];
    CHECK(block_projection(compose(g, h), blocks) ==
          compose(block_projection(g, blocks), block_projection(h, blocks)));
  }
}

TEST_CASE("kernel")
{
  {
    WreathInstanceSpec spec(3, 2);
    auto k = kernel(generate(build_wreath_group(spec)), wreath_blocks(spec));
    CHECK(k.size() == 4);
  }
  {
    WreathInstanceSpec spec(3, 3);
    auto k = kernel(generate(build_wreath_group(spec)), wreath_blocks(spec));
    CHECK(k.size() == 27);
  }
  auto sym = generate(adjacent_transpositions(3));
  CHECK(kernel(sym, BlockMap::uniform(3, 1)).size() == 1);
}

TEST_CASE("wreath groups: |G| = |kernel| n!, kernel abelian")
{
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::int64_t q = 1; q <= 6; ++q) {
      WreathInstanceSpec spec(n, q);
      auto group = generate(build_wreath_group(spec));
      auto k = kernel(group, wreath_blocks(spec));
      CAPTURE(n);
      CAPTURE(q);
      CHECK(group.order() == k.size() * factorial(n));
      if (k.size() <= 700) {
        bool abelian = true;
        for (auto const &a : k)
          for (auto const &b : k)
            abelian = abelian && compose(a, b) == compose(b, a);
        CHECK(abelian);
      }
    }
}

TEST_CASE("decode_translation")
{
  WreathInstanceSpec spec(3, 4);
  auto gens = build_wreath_group(spec);
  auto blocks = wreath_blocks(spec);

  CHECK(decode_translation(Permutation::identity(12), blocks, 4).shifts ==
        ResidueVector({0, 0, 0}, 4));

  // g_1^2 computed pointwise: (x,0) -> (x+1,0), (x,1) -> (x+1,1).
  Permutation g1sq = compose(gens[0], gens[0]);
  for (Point x = 0; x < 4; ++x) {
    CHECK(apply_twice(gens[0], x) == (x + 1) % 4);
    CHECK(apply_twice(gens[0], 4 + x) == 4 + (x + 1) % 4);
    CHECK(apply_twice(gens[0], 8 + x) == 8 + x);
  }
  CHECK(decode_translation(g1sq, blocks, 4).shifts == ResidueVector({1, 1, 0}, 4));
  CHECK(decode_translation(compose(gens[1], gens[1]), blocks, 4).shifts ==
        ResidueVector({0, 1, 1}, 4));

  CHECK_THROWS_AS(decode_translation(gens[0], blocks, 4), StructureError);
  // Stays in block 0 but is not a shift.
  CHECK_THROWS_AS(decode_translation(Permutation::transposition(12, 0, 1), blocks, 4),
                  StructureError);

  TranslationVector v{ResidueVector({3, 0, 2}, 4)};
  CHECK(decode_translation(translation_permutation(v, blocks), blocks, 4) == v);
}

TEST_CASE("conjugation_action")
{
  WreathInstanceSpec spec(3, 4);
  auto gens = build_wreath_group(spec);
  auto blocks = wreath_blocks(spec);
  auto shift = [&](std::initializer_list<std::int64_t> v) {
    return translation_permutation({ResidueVector(v, 4)}, blocks);
  };

  CHECK(conjugation_action(gens[0], shift({1, 0, 0}), blocks, 4).shifts ==
        ResidueVector({0, 1, 0}, 4));
  CHECK(conjugation_action(Permutation::identity(12), shift({1, 2, 3}), blocks, 4).shifts ==
        ResidueVector({1, 2, 3}, 4));
  CHECK(conjugation_action(gens[0], shift({0, 0, 1}), blocks, 4).shifts ==
        ResidueVector({0, 0, 1}, 4));
}

TEST_CASE("conjugation by g_s is the coordinate transposition (s, s+1)")
{
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::int64_t q = 1; q <= 6; ++q) {
      WreathInstanceSpec spec(n, q);
      auto gens = build_wreath_group(spec);
      auto blocks = wreath_blocks(spec);
      auto const len = static_cast<Index>(n);
      for (std::size_t s = 1; s < n; ++s) {
        Int64Matrix m(len, len);
        for (Index j = 0; j < len; ++j)
          m.col(j) = conjugation_action(gens[s - 1],
                                        translation_permutation(
                                          {ResidueVector::unit(len, j, q)}, blocks),
                                        blocks, q)
                       .shifts.coords();
        Int64Matrix swap = Int64Matrix::Identity(len, len);
        swap.row(static_cast<Index>(s - 1)).swap(swap.row(static_cast<Index>(s)));
        CHECK(ResidueMatrix(m, q) == ResidueMatrix(swap, q));
      }
    }
}
