#include "braidsplit/wreath.hpp"

#include <set>
#include <string>

#include "braidsplit/crt.hpp"
#include "braidsplit/error.hpp"

namespace braidsplit {

WreathInstanceSpec::WreathInstanceSpec(std::size_t n_, std::int64_t q_) : n(n_), q(q_)
{
  if (n < 2)
    throw DomainError("wreath instance needs n >= 2, got " + std::to_string(n));
  check_modulus(q);
}

std::optional<std::int64_t> WreathInstanceSpec::half_modulus() const
{
  if (q % 2 != 0)
    return std::nullopt;
  return q / 2;
}

std::vector<Permutation> build_wreath_group(WreathInstanceSpec const &spec, std::size_t cap)
{
  if (spec.degree() > cap)
    throw ResourceError("wreath degree " + std::to_string(spec.degree()) +
                          " exceeds the cap of " + std::to_string(cap),
                        cap);
  auto const q = static_cast<Point>(spec.q);
  std::vector<Permutation> gens;
  for (std::size_t s = 1; s < spec.n; ++s) {
    auto const lo = static_cast<Point>((s - 1) * q);
    auto const hi = static_cast<Point>(s * q);
    auto im = Permutation::identity(spec.degree()).images();
    for (Point x = 0; x < q; ++x) {
      im[lo + x] = hi + x;
      im[hi + x] = lo + (x + 1) % q;
    }
    gens.emplace_back(std::move(im));
  }
  return gens;
}

BlockMap wreath_blocks(WreathInstanceSpec const &spec)
{
  return BlockMap::uniform(spec.n, static_cast<std::size_t>(spec.q));
}

Realization wreath_realization(WreathInstanceSpec const &spec)
{
  return {build_wreath_group(spec), wreath_blocks(spec), spec.q};
}

namespace {

ResidueVector basis_sum(std::size_t n, std::int64_t q, std::size_t i, std::size_t j)
{
  if (i < 1 || j > n)
    throw DomainError("element index out of range");
  Int64Vector v = Int64Vector::Zero(static_cast<Index>(n));
  v(static_cast<Index>(i - 1)) += 1;
  v(static_cast<Index>(j - 1)) += 1;
  return ResidueVector(v, q);
}

ResidueMatrix coordinate_swap(std::size_t n, std::int64_t q, std::size_t s)
{
  Int64Matrix m = Int64Matrix::Identity(static_cast<Index>(n), static_cast<Index>(n));
  m.row(static_cast<Index>(s - 1)).swap(m.row(static_cast<Index>(s)));
  return ResidueMatrix(m, q);
}

// All elements of the subgroup of (Z/q)^len spanned by the given vectors.
std::set<std::vector<std::int64_t>> span_of(std::vector<ResidueVector> const &gens,
                                            Index len, std::int64_t q)
{
  std::set<std::vector<std::int64_t>> span{std::vector<std::int64_t>(static_cast<std::size_t>(len), 0)};
  for (auto const &g : gens) {
    std::set<std::vector<std::int64_t>> next;
    for (auto const &v : span) {
      ResidueVector x(v, q);
      for (std::int64_t c = 0; c < q; ++c) {
        next.insert(x.to_std());
        x = x + g;
      }
    }
    span = std::move(next);
  }
  return span;
}

} // namespace

ResidueVector f_bar(std::size_t n, std::int64_t q, std::size_t s)
{
  if (s < 1 || s >= n)
    throw DomainError("f_bar index " + std::to_string(s) + " out of range");
  return basis_sum(n, q, s, s + 1);
}

ResidueVector g_bar(std::size_t n, std::int64_t q, std::size_t r)
{
  if (r < 1 || r + 2 > n)
    throw DomainError("g_bar index " + std::to_string(r) + " out of range");
  return basis_sum(n, q, r, r + 2);
}

ResidueVector h_bar(std::size_t n, std::int64_t q, std::size_t j)
{
  if (j < 1 || j > n)
    throw DomainError("h_bar index " + std::to_string(j) + " out of range");
  return basis_sum(n, q, j, j);
}

SigmaModule an_sigma_module(std::size_t n, std::int64_t q)
{
  if (n < 2)
    throw DomainError("an_sigma_module needs n >= 2");
  std::vector<ResidueMatrix> actions;
  std::vector<ResidueVector> gens;
  for (std::size_t s = 1; s < n; ++s) {
    actions.push_back(coordinate_swap(n, q, s));
    gens.push_back(f_bar(n, q, s));
  }
  gens.push_back(h_bar(n, q, n));
  return SigmaModule(n, q, std::move(actions), ResidueMatrix::from_rows(gens));
}

ExtensionData wreath_extension(WreathInstanceSpec const &spec)
{
  std::vector<ResidueVector> f;
  for (std::size_t s = 1; s < spec.n; ++s)
    f.push_back(f_bar(spec.n, spec.q, s));
  return ExtensionData(an_sigma_module(spec.n, spec.q), std::move(f),
                       wreath_realization(spec));
}

ExtractedExtension extract_extension(WreathInstanceSpec const &spec, std::size_t cap)
{
  std::size_t const n = spec.n;
  std::int64_t const q = spec.q;
  auto const len = static_cast<Index>(n);
  auto realization = wreath_realization(spec);
  auto const &gens = realization.generators;
  auto const &blocks = realization.blocks;

  auto group = generate(gens, cap);
  auto kern = kernel(group, blocks);

  // Greedy generating set of the decoded kernel.
  std::vector<ResidueVector> sub_gens;
  std::set<std::vector<std::int64_t>> span = span_of({}, len, q);
  for (auto const &k : kern) {
    auto v = decode_translation(k, blocks, q).shifts;
    if (span.contains(v.to_std()))
      continue;
    sub_gens.push_back(v);
    span = span_of(sub_gens, len, q);
  }
  if (span.size() != kern.size())
    throw InvariantViolation("decoded kernel is not closed under addition");

  std::vector<ResidueMatrix> actions;
  for (std::size_t s = 1; s < n; ++s) {
    Int64Matrix m(len, len);
    for (Index j = 0; j < len; ++j) {
      auto shift = translation_permutation({ResidueVector::unit(len, j, q)}, blocks);
      m.col(j) = conjugation_action(gens[s - 1], shift, blocks, q).shifts.coords();
    }
    actions.emplace_back(m, q);
  }

  std::vector<ResidueVector> f;
  for (auto const &g : gens)
    f.push_back(decode_translation(compose(g, g), blocks, q).shifts);

  ResidueMatrix sub = sub_gens.empty() ? ResidueMatrix(0, len, q)
                                       : ResidueMatrix::from_rows(sub_gens);
  SigmaModule module(n, q, std::move(actions), std::move(sub));

  auto const closed = an_sigma_module(n, q);
  if (module.actions() != closed.actions())
    throw InvariantViolation("extracted actions differ from the coordinate transpositions");
  for (std::size_t s = 1; s < n; ++s)
    if (!(f[s - 1] == f_bar(n, q, s)))
      throw InvariantViolation("g_" + std::to_string(s) + "^2 differs from f_bar");

  bool const full = same_submodule(module, closed);
  return {ExtensionData(std::move(module), std::move(f), std::move(realization)),
          group.order(), kern.size(), full};
}

std::vector<ResidueVector> case1_solution(std::size_t n, std::int64_t q)
{
  if (q % 2 == 0)
    throw DomainError("case 1 needs odd q, got " + std::to_string(q));
  std::int64_t const half = *inverse_mod(2, q);
  std::vector<ResidueVector> out;
  for (std::size_t s = 1; s < n; ++s)
    out.push_back(-half * f_bar(n, q, s));
  return out;
}

std::vector<ResidueVector> case2_mod2_display(std::size_t n)
{
  if (n < 3)
    throw DomainError("the mod-2 solution needs n >= 3");
  std::vector<ResidueVector> out;
  for (std::size_t r = 1; r + 3 <= n; ++r) {
    ResidueVector a(static_cast<Index>(n), 2);
    for (std::size_t t = r; t + 2 <= n; ++t)
      a = a + f_bar(n, 2, t);
    out.push_back(a);
  }
  out.push_back(f_bar(n, 2, n - 1));
  out.push_back(f_bar(n, 2, n - 2));
  return out;
}

std::vector<ResidueVector> case2_solution(std::size_t n, std::int64_t q)
{
  if (q % 4 != 2)
    throw DomainError("case 2 needs q = 2 (mod 4), got " + std::to_string(q));
  auto const mod2 = case2_mod2_display(n);
  std::int64_t const q2 = q / 2;
  if (q2 == 1)
    return mod2;
  auto const odd = case1_solution(n, q2);
  std::vector<ResidueVector> out;
  for (std::size_t s = 0; s + 1 < n; ++s)
    out.push_back(crt_combine({odd[s], mod2[s]}));
  return out;
}

bool Case3Congruences::satisfied_by(std::int64_t x1, std::int64_t x2, std::int64_t y) const
{
  return matrix * ResidueVector({x1, x2, y}, q) == rhs;
}

Case3Congruences case3_congruences(std::size_t n, std::int64_t q)
{
  if (n < 3)
    throw DomainError("case 3 congruences need n >= 3");
  std::int64_t const sign = (n - 1) % 2 == 0 ? 1 : -1;
  return {n, q, ResidueMatrix({{2, 1, 0}, {0, 2 * sign, 4}}, q), ResidueVector({-1, 0}, q)};
}

SolveOutcome case3_obstruction(std::size_t n, std::int64_t q)
{
  auto c = case3_congruences(n, q);
  return solve_mod(c.matrix, c.rhs);
}

} // namespace braidsplit
