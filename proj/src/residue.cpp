#include "braidsplit/residue.hpp"

#include <ostream>
#include <string>

#include "braidsplit/error.hpp"

namespace braidsplit {

namespace {

void require_same_modulus(std::int64_t a, std::int64_t b)
{
  if (a != b)
    throw ModulusMismatch("modulus mismatch: " + std::to_string(a) + " vs " +
                          std::to_string(b));
}

Int64Vector reduce_all(Int64Vector const &v, std::int64_t q)
{
  return v.unaryExpr([q](std::int64_t x) { return reduce_mod(x, q); });
}

Int64Matrix reduce_all(Int64Matrix const &m, std::int64_t q)
{
  return m.unaryExpr([q](std::int64_t x) { return reduce_mod(x, q); });
}

// inner * (q-1)^2 must stay below 2^62 for an unreduced dense product.
void check_product_range(Index inner, std::int64_t q)
{
  __int128 bound = static_cast<__int128>(inner) * (q - 1) * (q - 1);
  if (bound >= (static_cast<__int128>(1) << 62))
    throw DomainError("residue product would overflow 64-bit accumulation");
}

} // namespace

std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t q)
{
  check_modulus(q);
  if (q == 1)
    return 0;
  std::int64_t r0 = q, r1 = reduce_mod(a, q);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t t = r0 / r1;
    std::int64_t r2 = r0 - t * r1;
    std::int64_t s2 = s0 - t * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1)
    return std::nullopt;
  return reduce_mod(s0, q);
}

void check_modulus(std::int64_t q)
{
  if (q < 1 || q > max_modulus)
    throw DomainError("modulus out of range: " + std::to_string(q));
}

Residue::Residue(std::int64_t value, std::int64_t modulus)
  : value_(0), modulus_(modulus)
{
  check_modulus(modulus);
  value_ = reduce_mod(value, modulus);
}

std::optional<Residue> Residue::inverse() const
{
  auto inv = inverse_mod(value_, modulus_);
  if (!inv)
    return std::nullopt;
  return Residue(*inv, modulus_);
}

Residue operator+(Residue const &a, Residue const &b)
{
  require_same_modulus(a.modulus_, b.modulus_);
  return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(Residue const &a, Residue const &b)
{
  require_same_modulus(a.modulus_, b.modulus_);
  return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(Residue const &a, Residue const &b)
{
  require_same_modulus(a.modulus_, b.modulus_);
  return Residue(a.value_ * b.value_, a.modulus_);
}

Residue operator-(Residue const &a) { return Residue(-a.value_, a.modulus_); }

// ---------------------------------------------------------------------------

ResidueVector::ResidueVector(Index length, std::int64_t modulus)
  : coords_(Int64Vector::Zero(length)), modulus_(modulus)
{
  check_modulus(modulus);
}

ResidueVector::ResidueVector(Int64Vector const &coords, std::int64_t modulus)
  : modulus_(modulus)
{
  check_modulus(modulus);
  coords_ = reduce_all(coords, modulus);
}

ResidueVector::ResidueVector(std::initializer_list<std::int64_t> coords,
                             std::int64_t modulus)
  : ResidueVector(std::vector<std::int64_t>(coords), modulus)
{}

ResidueVector::ResidueVector(std::vector<std::int64_t> const &coords,
                             std::int64_t modulus)
  : modulus_(modulus)
{
  check_modulus(modulus);
  coords_.resize(static_cast<Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    coords_(static_cast<Index>(i)) = reduce_mod(coords[i], modulus);
}

ResidueVector ResidueVector::unit(Index length, Index i, std::int64_t modulus)
{
  Int64Vector v = Int64Vector::Zero(length);
  v(i) = 1;
  return ResidueVector(v, modulus);
}

ResidueVector ResidueVector::reduced(std::int64_t divisor) const
{
  check_modulus(divisor);
  if (modulus_ % divisor != 0)
    throw DomainError("reduction modulus " + std::to_string(divisor) +
                      " does not divide " + std::to_string(modulus_));
  return ResidueVector(coords_, divisor);
}

ResidueVector ResidueVector::segment(Index start, Index length) const
{
  if (start < 0 || length < 0 || start + length > size())
    throw DimensionMismatch("segment out of range");
  return ResidueVector(Int64Vector(coords_.segment(start, length)), modulus_);
}

std::vector<std::int64_t> ResidueVector::to_std() const
{
  return std::vector<std::int64_t>(coords_.data(), coords_.data() + coords_.size());
}

ResidueVector operator+(ResidueVector const &a, ResidueVector const &b)
{
  require_same_modulus(a.modulus_, b.modulus_);
  if (a.size() != b.size())
    throw DimensionMismatch("vector length mismatch");
  return ResidueVector(Int64Vector(a.coords_ + b.coords_), a.modulus_);
}

ResidueVector operator-(ResidueVector const &a, ResidueVector const &b)
{
  require_same_modulus(a.modulus_, b.modulus_);
  if (a.size() != b.size())
    throw DimensionMismatch("vector length mismatch");
  return ResidueVector(Int64Vector(a.coords_ - b.coords_), a.modulus_);
}

ResidueVector operator-(ResidueVector const &a)
{
  return ResidueVector(Int64Vector(-a.coords_), a.modulus_);
}

ResidueVector operator*(std::int64_t c, ResidueVector const &a)
{
  return ResidueVector(Int64Vector(reduce_mod(c, a.modulus_) * a.coords_), a.modulus_);
}

bool operator==(ResidueVector const &a, ResidueVector const &b)
{
  return a.modulus_ == b.modulus_ && a.coords_.size() == b.coords_.size() &&
         a.coords_ == b.coords_;
}

ResidueVector concat(std::vector<ResidueVector> const &parts)
{
  if (parts.empty())
    throw DimensionMismatch("concat of no vectors");
  std::int64_t q = parts.front().modulus();
  Index total = 0;
  for (auto const &p : parts) {
    require_same_modulus(q, p.modulus());
    total += p.size();
  }
  Int64Vector out(total);
  Index at = 0;
  for (auto const &p : parts) {
    out.segment(at, p.size()) = p.coords();
    at += p.size();
  }
  return ResidueVector(out, q);
}

// ---------------------------------------------------------------------------

ResidueMatrix::ResidueMatrix(Index rows, Index cols, std::int64_t modulus)
  : entries_(Int64Matrix::Zero(rows, cols)), modulus_(modulus)
{
  check_modulus(modulus);
}

ResidueMatrix::ResidueMatrix(Int64Matrix const &entries, std::int64_t modulus)
  : modulus_(modulus)
{
  check_modulus(modulus);
  entries_ = reduce_all(entries, modulus);
}

ResidueMatrix::ResidueMatrix(
  std::initializer_list<std::initializer_list<std::int64_t>> rows, std::int64_t modulus)
  : modulus_(modulus)
{
  check_modulus(modulus);
  Index r = static_cast<Index>(rows.size());
  Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  entries_.resize(r, c);
  Index i = 0;
  for (auto const &row : rows) {
    if (static_cast<Index>(row.size()) != c)
      throw DimensionMismatch("ragged matrix literal");
    Index j = 0;
    for (auto v : row)
      entries_(i, j++) = reduce_mod(v, modulus);
    ++i;
  }
}

ResidueMatrix ResidueMatrix::identity(Index size, std::int64_t modulus)
{
  return ResidueMatrix(Int64Matrix::Identity(size, size), modulus);
}

ResidueMatrix ResidueMatrix::from_rows(std::vector<ResidueVector> const &rows)
{
  if (rows.empty())
    throw DimensionMismatch("matrix from no rows");
  std::int64_t q = rows.front().modulus();
  Index c = rows.front().size();
  Int64Matrix m(static_cast<Index>(rows.size()), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_same_modulus(q, rows[i].modulus());
    if (rows[i].size() != c)
      throw DimensionMismatch("rows of unequal length");
    m.row(static_cast<Index>(i)) = rows[i].coords().transpose();
  }
  return ResidueMatrix(m, q);
}

ResidueMatrix ResidueMatrix::from_rows(std::vector<std::vector<std::int64_t>> const &rows,
                                       Index cols, std::int64_t modulus)
{
  Int64Matrix m(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Index>(rows[i].size()) != cols)
      throw DimensionMismatch("row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(cols));
    for (Index j = 0; j < cols; ++j)
      m(static_cast<Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return ResidueMatrix(m, modulus);
}

ResidueVector ResidueMatrix::row(Index i) const
{
  return ResidueVector(Int64Vector(entries_.row(i).transpose()), modulus_);
}

ResidueVector ResidueMatrix::col(Index j) const
{
  return ResidueVector(Int64Vector(entries_.col(j)), modulus_);
}

ResidueMatrix ResidueMatrix::transpose() const
{
  return ResidueMatrix(Int64Matrix(entries_.transpose()), modulus_);
}

ResidueMatrix ResidueMatrix::with_block(Index row, Index col, ResidueMatrix const &block) const
{
  require_same_modulus(modulus_, block.modulus_);
  if (row + block.rows() > rows() || col + block.cols() > cols())
    throw DimensionMismatch("block does not fit");
  Int64Matrix m = entries_;
  m.block(row, col, block.rows(), block.cols()) = block.entries_;
  return ResidueMatrix(m, modulus_);
}

ResidueMatrix operator+(ResidueMatrix const &a, ResidueMatrix const &b)
{
  require_same_modulus(a.modulus_, b.modulus_);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shape mismatch");
  return ResidueMatrix(Int64Matrix(a.entries_ + b.entries_), a.modulus_);
}

ResidueMatrix operator-(ResidueMatrix const &a, ResidueMatrix const &b)
{
  require_same_modulus(a.modulus_, b.modulus_);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix shape mismatch");
  return ResidueMatrix(Int64Matrix(a.entries_ - b.entries_), a.modulus_);
}

ResidueMatrix operator-(ResidueMatrix const &a)
{
  return ResidueMatrix(Int64Matrix(-a.entries_), a.modulus_);
}

ResidueMatrix operator*(ResidueMatrix const &a, ResidueMatrix const &b)
{
  require_same_modulus(a.modulus_, b.modulus_);
  if (a.cols() != b.rows())
    throw DimensionMismatch("matrix product shape mismatch");
  check_product_range(a.cols(), a.modulus_);
  return ResidueMatrix(Int64Matrix(a.entries_ * b.entries_), a.modulus_);
}

ResidueVector operator*(ResidueMatrix const &a, ResidueVector const &x)
{
  require_same_modulus(a.modulus_, x.modulus());
  if (a.cols() != x.size())
    throw DimensionMismatch("matrix-vector shape mismatch");
  check_product_range(a.cols(), a.modulus_);
  return ResidueVector(Int64Vector(a.entries_ * x.coords()), a.modulus_);
}

ResidueMatrix operator*(std::int64_t c, ResidueMatrix const &a)
{
  return ResidueMatrix(Int64Matrix(reduce_mod(c, a.modulus_) * a.entries_), a.modulus_);
}

bool operator==(ResidueMatrix const &a, ResidueMatrix const &b)
{
  return a.modulus_ == b.modulus_ && a.rows() == b.rows() && a.cols() == b.cols() &&
         a.entries_ == b.entries_;
}

ResidueVector left_multiply(ResidueVector const &u, ResidueMatrix const &m)
{
  return m.transpose() * u;
}

std::int64_t dot(ResidueVector const &a, ResidueVector const &b)
{
  require_same_modulus(a.modulus(), b.modulus());
  if (a.size() != b.size())
    throw DimensionMismatch("dot length mismatch");
  check_product_range(a.size(), a.modulus());
  return reduce_mod(a.coords().dot(b.coords()), a.modulus());
}

std::ostream &operator<<(std::ostream &os, Residue const &r)
{
  return os << r.value() << " (mod " << r.modulus() << ")";
}

std::ostream &operator<<(std::ostream &os, ResidueVector const &v)
{
  os << '[';
  for (Index i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  return os << ']';
}

std::ostream &operator<<(std::ostream &os, ResidueMatrix const &m)
{
  os << '[';
  for (Index i = 0; i < m.rows(); ++i)
    os << (i ? "," : "") << m.row(i);
  return os << ']';
}

} // namespace braidsplit
