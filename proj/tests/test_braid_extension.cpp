#include <doctest.h>

#include <random>

#include "braidsplit/braid.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/solve.hpp"
#include "braidsplit/split.hpp"
#include "braidsplit/wreath.hpp"

using namespace braidsplit;

namespace {

SigmaModule trivial_module(std::size_t n, std::int64_t q)
{
  auto const id = ResidueMatrix::identity(static_cast<Index>(n), q);
  return SigmaModule(n, q, std::vector<ResidueMatrix>(n - 1, id), id);
}

// Coefficients of a section against the generators, concatenated.
ResidueVector unknowns_of(ExtensionData const &ext, std::vector<ResidueVector> const &a)
{
  std::vector<ResidueVector> parts;
  for (auto const &as : a)
    parts.push_back(*ext.module().coordinates(as));
  return concat(parts);
}

bool i_row_holds(ExtensionData const &ext, std::vector<ResidueVector> const &a, std::size_t r)
{
  return (operator_I(ext.module(), r) * (a[r - 1] - a[r])).is_zero();
}

} // namespace

TEST_CASE("check_braid_relations")
{
  std::vector<Permutation> coxeter;
  for (Point s = 0; s + 1 < 4; ++s)
    coxeter.push_back(Permutation::transposition(4, s, s + 1));
  CHECK(check_braid_relations(coxeter));

  auto wreath = build_wreath_group({4, 3});
  CHECK(check_braid_relations(wreath));
  // Pointwise over all 12 points, as an independent check of one relation.
  for (Point x = 0; x < 12; ++x)
    CHECK(wreath[0][wreath[1][wreath[0][x]]] == wreath[1][wreath[0][wreath[1][x]]]);

  // Adjacent relations hold, but g_1 and g_3 do not commute.
  auto t01 = Permutation::transposition(3, 0, 1);
  auto t12 = Permutation::transposition(3, 1, 2);
  CHECK_FALSE(check_braid_relations(std::vector<Permutation>{t01, t01, t12}));

  CHECK_THROWS_AS(check_braid_relations(std::vector<Permutation>{}), DomainError);
}

TEST_CASE("evaluate_braid_word")
{
  auto gens = build_wreath_group({3, 3});
  CHECK(evaluate_braid_word(BraidWord(3, {}), gens).is_identity());
  CHECK(evaluate_braid_word(BraidWord(3, {1, -1}), gens).is_identity());
  CHECK(evaluate_braid_word(BraidWord(3, {1, 2, 1}), gens) ==
        evaluate_braid_word(BraidWord(3, {2, 1, 2}), gens));
  CHECK(evaluate_braid_word(BraidWord(3, {1, 2}), gens) == compose(gens[0], gens[1]));

  CHECK_THROWS_AS(BraidWord(3, {3}), DomainError);
  CHECK_THROWS_AS(BraidWord(3, {0}), DomainError);
  auto t01 = Permutation::transposition(3, 0, 1);
  CHECK_THROWS_AS(BraidEvaluator({t01, t01, Permutation::transposition(3, 1, 2)}),
                  InvariantViolation);
}

TEST_CASE("SigmaModule invariants are enforced")
{
  auto const id = ResidueMatrix::identity(2, 5);
  ResidueMatrix scale({{2, 0}, {0, 1}}, 5);
  CHECK_THROWS_AS(SigmaModule(2, 5, {scale}, id), InvariantViolation);

  ResidueMatrix swap({{0, 1}, {1, 0}}, 5);
  // <e_1> is not stable under the swap.
  CHECK_THROWS_AS(SigmaModule(2, 5, {swap}, ResidueMatrix({{1, 0}}, 5)), InvariantViolation);
  CHECK_THROWS_AS(SigmaModule(3, 5, {swap}, id), DimensionMismatch);

  // Both are involutions but the braid identity fails.
  ResidueMatrix neg({{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5);
  ResidueMatrix s12({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, 5);
  CHECK_THROWS_AS(SigmaModule(3, 5, {neg, s12}, ResidueMatrix::identity(3, 5)),
                  InvariantViolation);
}

TEST_CASE("operator_J")
{
  auto trivial = trivial_module(3, 5);
  CHECK(operator_J(trivial, 1) == 2 * ResidueMatrix::identity(3, 5));

  auto mod = an_sigma_module(4, 5);
  CHECK(operator_J(mod, 1) * f_bar(4, 5, 2) == ResidueVector({1, 1, 2, 0}, 5));
  CHECK((operator_J(mod, 2) * ResidueVector(4, 5)).is_zero());
  CHECK_THROWS_AS(operator_J(mod, 0), DomainError);
  CHECK_THROWS_AS(operator_J(mod, 4), DomainError);
}

TEST_CASE("operator_I")
{
  auto trivial = trivial_module(3, 5);
  CHECK(operator_I(trivial, 1) == 3 * ResidueMatrix::identity(3, 5));

  auto mod = an_sigma_module(4, 5);
  auto i12 = operator_I(mod, 1);
  CHECK(i12 * f_bar(4, 5, 1) == ResidueVector({2, 2, 2, 0}, 5));
  CHECK(i12 * f_bar(4, 5, 1) == f_bar(4, 5, 1) + f_bar(4, 5, 2) + g_bar(4, 5, 1));
  CHECK((i12 * (f_bar(4, 5, 1) - f_bar(4, 5, 2))).is_zero());
  CHECK_THROWS_AS(operator_I(mod, 3), DomainError);
  CHECK_THROWS_AS(operator_I(mod, 0), DomainError);
}

TEST_CASE("ExtensionData invariants")
{
  auto mod = an_sigma_module(3, 4);
  // e_1 + e_3 is in A but not fixed by iota_1.
  CHECK_THROWS_AS(ExtensionData(mod, {ResidueVector({1, 0, 1}, 4), f_bar(3, 4, 2)}),
                  InvariantViolation);
  // 1 + 1 + 1 is odd: not in A for even q.
  CHECK_THROWS_AS(ExtensionData(mod, {ResidueVector({1, 1, 1}, 4), f_bar(3, 4, 2)}),
                  InvariantViolation);
  CHECK_THROWS_AS(ExtensionData(mod, {f_bar(3, 4, 1)}), DimensionMismatch);
}

TEST_CASE("assemble_split_system layout")
{
  {
    auto ext = wreath_extension({2, 3});
    auto sys = assemble_split_system(ext);
    CHECK(sys.layout.i_blocks == 0);
    CHECK(sys.matrix.rows() == 2);
    CHECK(sys.matrix.cols() == ext.module().generator_count());
    CHECK(sys.matrix == operator_J(ext.module(), 1) * ext.module().generator_columns());
  }
  {
    auto ext = wreath_extension({3, 5});
    auto sys = assemble_split_system(ext);
    Index const k = ext.module().generator_count();
    CHECK(sys.layout.block_height == 3);
    CHECK(sys.matrix.rows() == 9);
    CHECK(sys.matrix.cols() == 2 * k);
    CHECK(sys.rhs.segment(0, 3) == -f_bar(3, 5, 1));
    CHECK(sys.rhs.segment(6, 3).is_zero());
  }
  {
    auto ext = wreath_extension({3, 1});
    CHECK(is_solvable(solve_mod(assemble_split_system(ext).matrix,
                                assemble_split_system(ext).rhs)));
  }
}

TEST_CASE("decide_split examples")
{
  {
    auto ext = wreath_extension({3, 5});
    auto v = decide_split(ext);
    REQUIRE(is_split(v));
    CHECK(std::get<Split>(v).section_check.passed());
    CHECK(verify_section(ext, {2 * f_bar(3, 5, 1), 2 * f_bar(3, 5, 2)}).passed());
  }
  {
    auto ext = wreath_extension({3, 4});
    auto v = decide_split(ext);
    REQUIRE_FALSE(is_split(v));
    CHECK(verify_verdict(ext, v));
  }
  {
    auto ext = wreath_extension({4, 6});
    CHECK(is_split(decide_split(ext)));
  }
}

TEST_CASE("verify_section examples")
{
  auto e35 = wreath_extension({3, 5});
  auto good = verify_section(e35, {2 * f_bar(3, 5, 1), 2 * f_bar(3, 5, 2)});
  CHECK(good.passed());
  REQUIRE(good.realized.has_value());
  CHECK(*good.realized);

  auto e32 = wreath_extension({3, 2});
  CHECK(verify_section(e32, {f_bar(3, 2, 2), f_bar(3, 2, 1)}).passed());

  auto zero = verify_section(e35, {ResidueVector(3, 5), ResidueVector(3, 5)});
  CHECK_FALSE(zero.passed());
  CHECK_FALSE(zero.involution[0]);

  auto e34 = wreath_extension({3, 4});
  CHECK_THROWS_AS(verify_section(e34, {ResidueVector({1, 0, 0}, 4), ResidueVector(3, 4)}),
                  DomainError);
}

TEST_CASE("verdicts recheck against the assembled system")
{
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::int64_t q = 1; q <= 12; ++q) {
      CAPTURE(n);
      CAPTURE(q);
      auto ext = wreath_extension({n, q});
      auto sys = assemble_split_system(ext);
      auto v = decide_split(ext);
      if (auto const *split = std::get_if<Split>(&v)) {
        CHECK(sys.matrix * unknowns_of(ext, split->section) == sys.rhs);
        CHECK(split->section_check.system_conditions());
      } else {
        CHECK(verify_outcome(sys.matrix, sys.rhs,
                             Insolvable{std::get<NonSplit>(v).certificate}));
      }
    }
}

TEST_CASE("far-commutation obstruction for even n >= 4 with q = 2 (mod 4)")
{
  for (std::int64_t q : {2, 6, 10}) {
    CAPTURE(q);
    auto ext = wreath_extension({4, q});
    auto v = decide_split(ext);
    REQUIRE(is_split(v));
    auto const &split = std::get<Split>(v);
    CHECK(split.section_check.system_conditions());
    CHECK_FALSE(split.section_check.far_commutation());
    CHECK(split.section_check.realized == std::optional<bool>(false));
    REQUIRE(split.section_obstruction.has_value());
    auto full = assemble_coxeter_system(ext);
    CHECK(verify_outcome(full.matrix, full.rhs, Insolvable{*split.section_obstruction}));
  }
  // Odd n: the extended system is solvable and the section verifies.
  auto ext = wreath_extension({5, 2});
  auto v = decide_split(ext);
  REQUIRE(is_split(v));
  CHECK(std::get<Split>(v).section_check.passed());
  CHECK_FALSE(std::get<Split>(v).section_obstruction.has_value());
}

TEST_CASE("solvability does not depend on the generating set of A")
{
  std::mt19937 rng(31337);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::int64_t q = 1; q <= 8; ++q) {
      auto base = wreath_extension({n, q});
      auto const &gens = base.module().submodule_gens();
      std::uniform_int_distribution<std::int64_t> coeff(0, q - 1);
      // Unimodular mixing of the rows, then one redundant random combination.
      Int64Matrix g = gens.entries();
      for (int op = 0; op < 10; ++op) {
        Index i = static_cast<Index>(rng() % static_cast<unsigned>(g.rows()));
        Index j = static_cast<Index>(rng() % static_cast<unsigned>(g.rows()));
        if (i != j)
          g.row(i) += coeff(rng) * g.row(j);
        else
          g.row(i).swap(g.row((i + 1) % g.rows()));
      }
      Int64Matrix extended(g.rows() + 1, g.cols());
      extended.topRows(g.rows()) = g;
      extended.row(g.rows()).setZero();
      for (Index i = 0; i < g.rows(); ++i)
        extended.row(g.rows()) += coeff(rng) * g.row(i);

      SigmaModule mixed(n, q, base.module().actions(), ResidueMatrix(extended, q));
      REQUIRE(same_submodule(mixed, base.module()));
      ExtensionData ext(mixed, base.f(), base.realization());
      CAPTURE(n);
      CAPTURE(q);
      CHECK(is_split(decide_split(ext)) == is_split(decide_split(base)));
    }
}

TEST_CASE("adjacent braid condition and I-row agree on J-row solutions")
{
  std::mt19937 rng(2718);
  std::size_t agreements = 0, both_true = 0, both_false = 0;
  for (std::size_t n = 3; n <= 5; ++n)
    for (std::int64_t q : {2, 3, 4, 5, 6, 8}) {
      auto ext = wreath_extension({n, q});
      auto const &mod = ext.module();
      // Solution sets of each J-row separately.
      std::vector<Solution> rows;
      bool solvable = true;
      for (std::size_t s = 1; s < n; ++s) {
        auto out = solve_mod(operator_J(mod, s) * mod.generator_columns(), -ext.f(s));
        if (!is_solvable(out)) {
          solvable = false;
          break;
        }
        rows.push_back(std::get<Solution>(out));
      }
      if (!solvable)
        continue;
      std::uniform_int_distribution<std::int64_t> coeff(0, q - 1);
      for (int trial = 0; trial < 40; ++trial) {
        std::vector<ResidueVector> a;
        for (auto const &sol : rows) {
          auto x = sol.particular;
          for (auto const &k : sol.kernel_basis)
            x = x + coeff(rng) * k;
          a.push_back(mod.element(x));
        }
        auto report = verify_section(ext, a);
        for (std::size_t r = 1; r + 1 < n; ++r) {
          bool adjacent = report.adjacent[r - 1];
          bool irow = i_row_holds(ext, a, r);
          CHECK(adjacent == irow);
          agreements += adjacent == irow;
          both_true += adjacent && irow;
          both_false += !adjacent && !irow;
        }
      }
    }
  CHECK(agreements > 0);
  CHECK(both_true > 0);
  CHECK(both_false > 0);
}
