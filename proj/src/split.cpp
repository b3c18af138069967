#include "braidsplit/split.hpp"

#include <algorithm>
#include <string>

#include "braidsplit/braid.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/solve.hpp"

namespace braidsplit {

namespace {

SplitSystem assemble(ExtensionData const &ext, bool with_far)
{
  auto const &mod = ext.module();
  std::size_t const n = mod.n();
  std::int64_t const q = mod.q();
  Index const m = mod.rank();
  Index const k = mod.generator_count();
  auto const &gcols = mod.generator_columns();

  SystemLayout layout{n, m, k, n - 1, n - 2, 0};
  if (with_far)
    for (std::size_t s = 1; s < n; ++s)
      for (std::size_t t = s + 2; t < n; ++t)
        ++layout.far_blocks;

  auto const block_rows = layout.j_blocks + layout.i_blocks + layout.far_blocks;
  ResidueMatrix matrix(static_cast<Index>(block_rows) * m, static_cast<Index>(n - 1) * k, q);
  std::vector<ResidueVector> rhs;

  auto col = [k](std::size_t s) { return static_cast<Index>(s - 1) * k; };
  Index row = 0;

  for (std::size_t s = 1; s < n; ++s, row += m) {
    matrix = matrix.with_block(row, col(s), operator_J(mod, s) * gcols);
    rhs.push_back(-ext.f(s));
  }
  for (std::size_t r = 1; r + 1 < n; ++r, row += m) {
    auto ig = operator_I(mod, r) * gcols;
    matrix = matrix.with_block(row, col(r), ig).with_block(row, col(r + 1), -ig);
    rhs.emplace_back(m, q);
  }
  if (with_far) {
    auto const id = ResidueMatrix::identity(m, q);
    for (std::size_t s = 1; s < n; ++s)
      for (std::size_t t = s + 2; t < n; ++t, row += m) {
        matrix = matrix.with_block(row, col(s), (mod.action(t) - id) * gcols)
                   .with_block(row, col(t), (id - mod.action(s)) * gcols);
        rhs.emplace_back(m, q);
      }
  }

  ResidueVector b = rhs.empty() ? ResidueVector(0, q) : concat(rhs);
  return {std::move(matrix), std::move(b), layout};
}

} // namespace

std::vector<ResidueVector> SplitSystem::section_from(ResidueVector const &unknowns,
                                                     SigmaModule const &module) const
{
  Index const k = layout.unknown_width;
  if (unknowns.size() != static_cast<Index>(layout.n - 1) * k)
    throw DimensionMismatch("unknown vector does not match the system layout");
  std::vector<ResidueVector> out;
  for (std::size_t s = 0; s + 1 < layout.n; ++s)
    out.push_back(module.element(unknowns.segment(static_cast<Index>(s) * k, k)));
  return out;
}

SplitSystem assemble_split_system(ExtensionData const &ext) { return assemble(ext, false); }

SplitSystem assemble_coxeter_system(ExtensionData const &ext) { return assemble(ext, true); }

bool SectionReport::system_conditions() const
{
  return std::ranges::all_of(involution, [](bool b) { return b; }) &&
         std::ranges::all_of(adjacent, [](bool b) { return b; });
}

bool SectionReport::far_commutation() const
{
  return std::ranges::all_of(far, [](FarPairCheck const &c) { return c.holds; });
}

bool SectionReport::passed() const
{
  return system_conditions() && far_commutation() && realized.value_or(true);
}

SectionReport verify_section(ExtensionData const &ext, std::vector<ResidueVector> const &a)
{
  auto const &mod = ext.module();
  std::size_t const n = mod.n();
  if (a.size() != n - 1)
    throw DimensionMismatch("section needs " + std::to_string(n - 1) + " elements");
  for (std::size_t s = 1; s < n; ++s)
    if (!mod.contains(a[s - 1]))
      throw DomainError("a_" + std::to_string(s) + " is not in A");

  auto iota = [&mod](std::size_t s) -> ResidueMatrix const & { return mod.action(s); };
  auto at = [&a](std::size_t s) -> ResidueVector const & { return a[s - 1]; };

  SectionReport report;
  for (std::size_t s = 1; s < n; ++s)
    report.involution.push_back((ext.f(s) + iota(s) * at(s) + at(s)).is_zero());

  for (std::size_t r = 1; r + 1 < n; ++r) {
    auto lhs = iota(r) * (iota(r + 1) * at(r)) + iota(r) * at(r + 1) + at(r);
    auto rhs = iota(r + 1) * (iota(r) * at(r + 1)) + iota(r + 1) * at(r) + at(r + 1);
    report.adjacent.push_back(lhs == rhs);
  }

  for (std::size_t s = 1; s < n; ++s)
    for (std::size_t t = s + 2; t < n; ++t)
      report.far.push_back(
        {s, t, iota(t) * at(s) + at(t) == iota(s) * at(t) + at(s)});

  if (auto const &real = ext.realization()) {
    std::vector<Permutation> images;
    bool involutions = true;
    for (std::size_t s = 1; s < n; ++s) {
      auto shift = translation_permutation({at(s)}, real->blocks);
      images.push_back(compose(real->generators[s - 1], shift));
      involutions = involutions && compose(images.back(), images.back()).is_identity();
    }
    report.realized = involutions && check_braid_relations(images);
  }
  return report;
}

SplitVerdict decide_split(ExtensionData const &ext)
{
  auto const system = assemble_split_system(ext);
  auto outcome = solve_mod(system.matrix, system.rhs);
  if (auto const *ins = std::get_if<Insolvable>(&outcome))
    return NonSplit{ins->certificate};

  auto const &sol = std::get<Solution>(outcome);
  Split split{system.section_from(sol.particular, ext.module()), {}, std::nullopt};
  split.section_check = verify_section(ext, split.section);
  if (split.section_check.passed())
    return split;

  auto const coxeter = assemble_coxeter_system(ext);
  auto full = solve_mod(coxeter.matrix, coxeter.rhs);
  if (auto const *fsol = std::get_if<Solution>(&full)) {
    split.section = coxeter.section_from(fsol->particular, ext.module());
    split.section_check = verify_section(ext, split.section);
  } else {
    split.section_obstruction = std::get<Insolvable>(full).certificate;
  }
  return split;
}

bool verify_verdict(ExtensionData const &ext, SplitVerdict const &verdict)
{
  if (auto const *split = std::get_if<Split>(&verdict))
    return verify_section(ext, split->section).passed();
  auto const system = assemble_split_system(ext);
  return verify_outcome(system.matrix, system.rhs,
                        Insolvable{std::get<NonSplit>(verdict).certificate});
}

} // namespace braidsplit
