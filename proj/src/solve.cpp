#include "braidsplit/solve.hpp"

#include "braidsplit/error.hpp"
#include "braidsplit/integer_matrix.hpp"
#include "braidsplit/smith.hpp"

namespace braidsplit {

namespace {

// [M | qI] as an integer matrix.
IntegerMatrix augmented(ResidueMatrix const &m)
{
  Index const rows = m.rows();
  IntegerMatrix a = IntegerMatrix::Zero(rows, m.cols() + rows);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < m.cols(); ++j)
      a(i, j) = m(i, j);
    a(i, m.cols() + i) = m.modulus();
  }
  return a;
}

// Order of the additive subgroup of (Z/q)^dim spanned by the columns of gens.
BigInt span_order(IntegerMatrix const &gens, Index dim, std::int64_t q)
{
  IntegerMatrix a = IntegerMatrix::Zero(dim, gens.cols() + dim);
  a.leftCols(gens.cols()) = gens;
  for (Index i = 0; i < dim; ++i)
    a(i, gens.cols() + i) = q;
  auto snf = smith_normal_form(a);
  BigInt order = 1;
  for (Index i = 0; i < dim; ++i)
    order *= q / snf.D(i, i);
  return order;
}

} // namespace

SolveOutcome solve_mod(ResidueMatrix const &m, ResidueVector const &b)
{
  if (m.modulus() != b.modulus())
    throw ModulusMismatch("solve_mod: matrix and right-hand side moduli differ");
  if (m.rows() != b.size())
    throw DimensionMismatch("solve_mod: right-hand side length differs from row count");

  std::int64_t const q = m.modulus();
  Index const rows = m.rows();
  Index const cols = m.cols();

  auto snf = smith_normal_form(augmented(m));
  IntegerVector rhs = multiply(snf.U, lift(b));

  // [M | qI] has full row rank, so every d_i is nonzero and divides q.
  for (Index i = 0; i < rows; ++i) {
    BigInt const &d = snf.D(i, i);
    if (rhs(i) % d != 0) {
      BigInt scale = BigInt(q) / d;
      IntegerVector row(rows);
      for (Index j = 0; j < rows; ++j)
        row(j) = scale * snf.U(i, j);
      return Insolvable{reduce(row, q)};
    }
  }

  IntegerVector z = IntegerVector::Zero(cols + rows);
  for (Index i = 0; i < rows; ++i)
    z(i) = rhs(i) / snf.D(i, i);
  IntegerVector y = multiply(snf.V, z);

  Solution sol{reduce(IntegerVector(y.head(cols)), q), {}};
  for (Index j = rows; j < cols + rows; ++j) {
    auto k = reduce(IntegerVector(snf.V.col(j).head(cols)), q);
    if (!k.is_zero())
      sol.kernel_basis.push_back(std::move(k));
  }
  return sol;
}

bool verify_outcome(ResidueMatrix const &m, ResidueVector const &b,
                    SolveOutcome const &outcome)
{
  if (m.modulus() != b.modulus() || m.rows() != b.size())
    throw DimensionMismatch("verify_outcome: incompatible system");
  std::int64_t const q = m.modulus();

  if (auto const *ins = std::get_if<Insolvable>(&outcome)) {
    auto const &u = ins->certificate;
    if (u.modulus() != q || u.size() != m.rows())
      return false;
    return left_multiply(u, m).is_zero() && dot(u, b) != 0;
  }

  auto const &sol = std::get<Solution>(outcome);
  if (sol.particular.modulus() != q || sol.particular.size() != m.cols())
    return false;
  if (!(m * sol.particular == b))
    return false;
  for (auto const &k : sol.kernel_basis) {
    if (k.modulus() != q || k.size() != m.cols())
      return false;
    if (!(m * k).is_zero())
      return false;
  }

  // Completeness: the basis must span the whole kernel. Compare orders.
  Index const cols = m.cols();
  IntegerMatrix basis(cols, static_cast<Index>(sol.kernel_basis.size()));
  for (std::size_t j = 0; j < sol.kernel_basis.size(); ++j)
    basis.col(static_cast<Index>(j)) = lift(sol.kernel_basis[j]);
  BigInt spanned = span_order(basis, cols, q);

  // |ker M| = q^cols / |im M|.
  BigInt image = span_order(lift(m), m.rows(), q);
  BigInt total = 1;
  for (Index i = 0; i < cols; ++i)
    total *= q;
  return spanned * image == total;
}

} // namespace braidsplit
