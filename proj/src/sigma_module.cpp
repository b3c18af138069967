#include "braidsplit/sigma_module.hpp"

#include <string>

#include "braidsplit/braid.hpp"
#include "braidsplit/error.hpp"
#include "braidsplit/smith.hpp"
#include "braidsplit/solve.hpp"

namespace braidsplit {

SigmaModule::SigmaModule(std::size_t n, std::int64_t q, std::vector<ResidueMatrix> actions,
                         ResidueMatrix submodule_gens)
  : n_(n), q_(q), rank_(submodule_gens.cols()), actions_(std::move(actions)),
    gens_(std::move(submodule_gens)), columns_(gens_.transpose())
{
  check_modulus(q);
  if (n < 2)
    throw DomainError("Sigma_n-module needs n >= 2");
  if (actions_.size() != n - 1)
    throw DimensionMismatch("expected " + std::to_string(n - 1) + " action matrices, got " +
                            std::to_string(actions_.size()));
  if (gens_.modulus() != q)
    throw ModulusMismatch("submodule generators are not over Z/(q)");

  auto const id = ResidueMatrix::identity(rank_, q);
  for (std::size_t s = 1; s < n; ++s) {
    auto const &a = actions_[s - 1];
    if (a.modulus() != q)
      throw ModulusMismatch("action " + std::to_string(s) + " is not over Z/(q)");
    if (a.rows() != rank_ || a.cols() != rank_)
      throw DimensionMismatch("action " + std::to_string(s) + " is not " +
                              std::to_string(rank_) + "x" + std::to_string(rank_));
    if (!(a * a == id))
      throw InvariantViolation("iota_" + std::to_string(s) + " is not an involution");
  }
  if (!check_braid_relations(actions_))
    throw InvariantViolation("actions violate the braid or far-commutation identities");

  for (std::size_t s = 1; s < n; ++s)
    for (Index g = 0; g < gens_.rows(); ++g)
      if (!contains(actions_[s - 1] * gens_.row(g)))
        throw InvariantViolation("iota_" + std::to_string(s) +
                                 " does not preserve the submodule");
}

ResidueMatrix const &SigmaModule::action(std::size_t s) const
{
  if (s < 1 || s >= n_)
    throw DomainError("action index " + std::to_string(s) + " out of range");
  return actions_[s - 1];
}

ResidueVector SigmaModule::element(ResidueVector const &coeffs) const
{
  return columns_ * coeffs;
}

bool SigmaModule::contains(ResidueVector const &a) const
{
  return coordinates(a).has_value();
}

std::optional<ResidueVector> SigmaModule::coordinates(ResidueVector const &a) const
{
  if (a.size() != rank_ || a.modulus() != q_)
    throw DimensionMismatch("vector is not in the ambient module");
  auto out = solve_mod(columns_, a);
  if (auto const *sol = std::get_if<Solution>(&out))
    return sol->particular;
  return std::nullopt;
}

BigInt SigmaModule::order() const
{
  // |A| = q^m / [Z^m : L + qZ^m], the index being the product of the
  // invariant factors of [G^T | qI].
  IntegerMatrix a = IntegerMatrix::Zero(rank_, gens_.rows() + rank_);
  a.leftCols(gens_.rows()) = lift(columns_);
  for (Index i = 0; i < rank_; ++i)
    a(i, gens_.rows() + i) = q_;
  auto snf = smith_normal_form(a);
  BigInt order = 1;
  for (Index i = 0; i < rank_; ++i)
    order *= BigInt(q_) / snf.D(i, i);
  return order;
}

bool same_submodule(SigmaModule const &a, SigmaModule const &b)
{
  if (a.q() != b.q() || a.rank() != b.rank())
    return false;
  for (Index i = 0; i < a.generator_count(); ++i)
    if (!b.contains(a.submodule_gens().row(i)))
      return false;
  for (Index i = 0; i < b.generator_count(); ++i)
    if (!a.contains(b.submodule_gens().row(i)))
      return false;
  return true;
}

ResidueMatrix operator_J(SigmaModule const &module, std::size_t s)
{
  return module.action(s) + ResidueMatrix::identity(module.rank(), module.q());
}

ResidueMatrix operator_I(SigmaModule const &module, std::size_t r)
{
  if (r < 1 || r + 1 >= module.n())
    throw DomainError("I_{r,r+1} index " + std::to_string(r) + " out of range");
  auto const &a = module.action(r);
  auto const &b = module.action(r + 1);
  auto aba = a * b * a;
  if (!(aba == b * a * b))
    throw InvariantViolation("iota_r iota_{r+1} iota_r != iota_{r+1} iota_r iota_{r+1}");
  return aba + a + b;
}

// ---------------------------------------------------------------------------

ExtensionData::ExtensionData(SigmaModule module, std::vector<ResidueVector> f,
                             std::optional<Realization> realization)
  : module_(std::move(module)), f_(std::move(f)), realization_(std::move(realization))
{
  std::size_t const n = module_.n();
  if (f_.size() != n - 1)
    throw DimensionMismatch("expected " + std::to_string(n - 1) + " elements f_s, got " +
                            std::to_string(f_.size()));
  for (std::size_t s = 1; s < n; ++s) {
    auto const &fs = f_[s - 1];
    if (fs.size() != module_.rank() || fs.modulus() != module_.q())
      throw DimensionMismatch("f_" + std::to_string(s) + " is not in the ambient module");
    if (!module_.contains(fs))
      throw InvariantViolation("f_" + std::to_string(s) + " is not in A");
    if (!(module_.action(s) * fs == fs))
      throw InvariantViolation("iota_" + std::to_string(s) + " does not fix f_" +
                               std::to_string(s));
  }

  if (realization_) {
    auto const &r = *realization_;
    if (r.generators.size() != n - 1)
      throw DimensionMismatch("realization needs n-1 generators");
    if (r.q != module_.q() ||
        static_cast<Index>(r.blocks.block_count()) != module_.rank())
      throw DimensionMismatch("realization blocks do not match the ambient module");
    for (std::size_t s = 1; s < n; ++s) {
      auto const &g = r.generators[s - 1];
      if (!(decode_translation(compose(g, g), r.blocks, r.q).shifts == f_[s - 1]))
        throw InvariantViolation("realization: g_" + std::to_string(s) +
                                 "^2 does not decode to f_" + std::to_string(s));
    }
  }
}

ResidueVector const &ExtensionData::f(std::size_t s) const
{
  if (s < 1 || s > f_.size())
    throw DomainError("f index " + std::to_string(s) + " out of range");
  return f_[s - 1];
}

} // namespace braidsplit
