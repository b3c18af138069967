#include "braidsplit/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "braidsplit/error.hpp"
#include "braidsplit/split.hpp"
#include "braidsplit/wreath.hpp"

namespace braidsplit {

namespace {

using Coords = std::vector<std::int64_t>;

std::uint64_t factorial(std::size_t n)
{
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// base^exp, or nullopt once it passes limit.
std::optional<std::uint64_t> bounded_power(BigInt const &base, std::size_t exp,
                                           std::uint64_t limit)
{
  BigInt p = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    p *= base;
    if (p > limit)
      return std::nullopt;
  }
  return p.convert_to<std::uint64_t>();
}

Coords add(Coords a, Coords const &b, std::int64_t q)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = reduce_mod(a[i] + b[i], q);
  return a;
}

} // namespace

std::vector<ResidueVector> enumerate_submodule(SigmaModule const &module)
{
  std::int64_t const q = module.q();
  Index const k = module.generator_count();
  Index const m = module.rank();

  std::vector<ResidueVector> out;
  std::map<Coords, bool> seen;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k), 0);
  for (;;) {
    ResidueVector c(coeffs, q);
    auto e = k == 0 ? ResidueVector(m, q) : module.element(c);
    if (seen.emplace(e.to_std(), true).second)
      out.push_back(std::move(e));
    // Odometer, last coordinate fastest.
    Index i = k - 1;
    for (; i >= 0; --i) {
      auto &d = coeffs[static_cast<std::size_t>(i)];
      if (++d < q)
        break;
      d = 0;
    }
    if (i < 0)
      break;
  }
  return out;
}

LiftSearchResult brute_force_lifts(ExtensionData const &ext, LiftSearchOptions options)
{
  auto const &mod = ext.module();
  std::size_t const n = mod.n();
  std::int64_t const q = mod.q();

  BigInt const order = mod.order();
  auto space = bounded_power(order, n - 1, options.budget);
  if (!space) {
    BigInt exact = 1;
    for (std::size_t i = 0; i + 1 < n; ++i)
      exact *= order;
    throw ResourceError("lift search needs |A|^(n-1) = " + exact.str() +
                          " tuples, budget is " + std::to_string(options.budget),
                        static_cast<std::size_t>(options.budget));
  }

  auto elems = enumerate_submodule(mod);
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(elems.begin(), elems.end(), rng);
  }
  std::size_t const count = elems.size();
  std::map<Coords, std::size_t> index;
  std::vector<Coords> raw;
  for (std::size_t i = 0; i < count; ++i) {
    raw.push_back(elems[i].to_std());
    index.emplace(raw.back(), i);
  }

  // act[s-1][i] = index of iota_s(e_i).
  std::vector<std::vector<std::size_t>> act(n - 1, std::vector<std::size_t>(count));
  for (std::size_t s = 1; s < n; ++s)
    for (std::size_t i = 0; i < count; ++i)
      act[s - 1][i] = index.at((mod.action(s) * elems[i]).to_std());

  std::vector<std::vector<std::size_t>> candidates(n - 1);
  for (std::size_t s = 1; s < n; ++s) {
    auto const fs = ext.f(s).to_std();
    for (std::size_t i = 0; i < count; ++i) {
      auto sum = add(add(fs, raw[act[s - 1][i]], q), raw[i], q);
      if (std::ranges::all_of(sum, [](std::int64_t x) { return x == 0; }))
        candidates[s - 1].push_back(i);
    }
  }

  // Adjacent braid condition for a_r = e_i, a_{r+1} = e_j.
  auto adjacent = [&](std::size_t r, std::size_t i, std::size_t j) {
    auto const &ir = act[r - 1];
    auto const &ir1 = act[r];
    auto lhs = add(add(raw[ir[ir1[i]]], raw[ir[j]], q), raw[i], q);
    auto rhs = add(add(raw[ir1[ir[j]]], raw[ir1[i]], q), raw[j], q);
    return lhs == rhs;
  };
  auto far = [&](std::vector<std::size_t> const &tuple) {
    for (std::size_t s = 1; s < n; ++s)
      for (std::size_t t = s + 2; t < n; ++t) {
        std::size_t i = tuple[s - 1], j = tuple[t - 1];
        if (add(raw[act[t - 1][i]], raw[j], q) != add(raw[act[s - 1][j]], raw[i], q))
          return false;
      }
    return true;
  };

  LiftSearchResult result;
  result.searched = *space;
  std::vector<std::size_t> tuple(n - 1);

  // Depth-first in lexicographic order of element indices; pruning on the
  // adjacent condition is exact.
  auto dfs = [&](auto &self, std::size_t depth) -> void {
    if (depth == n - 1) {
      ++result.system_witnesses;
      if (!far(tuple))
        return;
      if (result.witnesses++ == 0) {
        std::vector<ResidueVector> w;
        for (auto i : tuple)
          w.push_back(elems[i]);
        result.first_witness = std::move(w);
      }
      return;
    }
    for (auto i : candidates[depth]) {
      if (depth > 0 && !adjacent(depth, tuple[depth - 1], i))
        continue;
      tuple[depth] = i;
      self(self, depth + 1);
    }
  };
  dfs(dfs, 0);
  return result;
}

ComplementSearchResult complement_search(PermutationGroup const &group, BlockMap const &blocks,
                                         std::size_t cap, std::uint64_t tuple_budget)
{
  if (group.order() > cap)
    throw ResourceError("complement search needs |G| <= " + std::to_string(cap) +
                          ", got " + std::to_string(group.order()),
                        cap);
  std::size_t const n = blocks.block_count();
  if (n < 2)
    throw DomainError("complement search needs at least 2 blocks");
  std::uint64_t const target = factorial(n);

  std::vector<Permutation> projections;
  for (auto const &e : group.elements())
    projections.push_back(block_projection(e, blocks));

  std::vector<std::vector<std::size_t>> candidates(n - 1);
  for (std::size_t s = 1; s < n; ++s) {
    auto theta = Permutation::transposition(n, static_cast<Point>(s - 1), static_cast<Point>(s));
    for (std::size_t i = 0; i < group.order(); ++i) {
      auto const &h = group.elements()[i];
      if (projections[i] == theta && compose(h, h).is_identity())
        candidates[s - 1].push_back(i);
    }
  }

  ComplementSearchResult result;
  std::vector<Permutation> chosen;
  auto dfs = [&](auto &self, std::size_t depth) -> bool {
    if (depth == n - 1) {
      if (++result.tuples_tried > tuple_budget)
        throw ResourceError("complement search exceeded " + std::to_string(tuple_budget) +
                              " generator tuples",
                            static_cast<std::size_t>(tuple_budget));
      auto sub = try_generate(chosen, static_cast<std::size_t>(target));
      if (!sub || sub->order() != target)
        return false;
      for (auto const &e : sub->elements())
        if (!e.is_identity() && block_projection(e, blocks).is_identity())
          return false;
      result.found = chosen;
      return true;
    }
    for (auto i : candidates[depth]) {
      chosen.push_back(group.elements()[i]);
      if (self(self, depth + 1))
        return true;
      chosen.pop_back();
    }
    return false;
  };
  dfs(dfs, 0);
  return result;
}

bool CrossValidationReport::all_agree() const
{
  return std::ranges::all_of(rows, [](CrossValidationRow const &r) { return r.agree; });
}

CrossValidationReport cross_validate(std::vector<std::size_t> const &ns,
                                     std::vector<std::int64_t> const &qs,
                                     CrossValidationOptions const &options)
{
  CrossValidationReport report;
  for (auto n : ns)
    for (auto q : qs) {
      WreathInstanceSpec spec(n, q);
      auto ext = wreath_extension(spec);
      CrossValidationRow row{n, q, is_split(decide_split(ext)), {}, {}, {}, true};

      try {
        auto lifts = brute_force_lifts(ext, {options.lift_budget, std::nullopt});
        row.lifts_split = lifts.witnesses > 0;
      } catch (ResourceError const &e) {
        row.skipped += std::string("lifts: ") + e.what() + "; ";
      }

      BigInt group_order = ext.module().order() * factorial(n);
      if (group_order <= options.complement_cap && group_order <= options.group_cap) {
        auto const &real = *ext.realization();
        auto group = generate(real.generators, options.group_cap);
        row.complement_split =
          complement_search(group, real.blocks, options.complement_cap).found.has_value();
      } else {
        row.skipped += "complement: |G| = " + group_order.str() + " over cap; ";
      }

      row.agree = row.lifts_split.value_or(row.decided_split) == row.decided_split &&
                  row.complement_split.value_or(row.decided_split) == row.decided_split;
      report.rows.push_back(std::move(row));
    }
  return report;
}

} // namespace braidsplit
