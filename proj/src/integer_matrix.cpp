#include "braidsplit/integer_matrix.hpp"

namespace braidsplit {

std::int64_t reduce_mod(BigInt const &v, std::int64_t q)
{
  BigInt r = v % q;
  if (r < 0)
    r += q;
  return r.convert_to<std::int64_t>();
}

IntegerMatrix lift(ResidueMatrix const &m)
{
  IntegerMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j);
  return out;
}

IntegerVector lift(ResidueVector const &v)
{
  IntegerVector out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out(i) = v[i];
  return out;
}

ResidueMatrix reduce(IntegerMatrix const &m, std::int64_t q)
{
  check_modulus(q);
  Int64Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out(i, j) = reduce_mod(m(i, j), q);
  return ResidueMatrix(out, q);
}

ResidueVector reduce(IntegerVector const &v, std::int64_t q)
{
  check_modulus(q);
  Int64Vector out(v.size());
  for (Index i = 0; i < v.size(); ++i)
    out(i) = reduce_mod(v(i), q);
  return ResidueVector(out, q);
}

} // namespace braidsplit
