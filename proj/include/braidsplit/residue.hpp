#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>

namespace braidsplit {

using Index = Eigen::Index;
using Int64Vector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using Int64Matrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Largest modulus accepted by the residue types. Keeps every dense product
// of desk-scale matrices inside 63 bits before reduction.
inline constexpr std::int64_t max_modulus = std::int64_t{1} << 24;

// Canonical representative of v in [0, q).
constexpr std::int64_t reduce_mod(std::int64_t v, std::int64_t q) noexcept
{
  std::int64_t r = v % q;
  return r < 0 ? r + q : r;
}

// Inverse of a modulo q, if gcd(a, q) = 1.
std::optional<std::int64_t> inverse_mod(std::int64_t a, std::int64_t q);

void check_modulus(std::int64_t q);

class Residue
{
public:
  Residue(std::int64_t value, std::int64_t modulus);

  std::int64_t value() const noexcept { return value_; }
  std::int64_t modulus() const noexcept { return modulus_; }

  std::optional<Residue> inverse() const;

  friend Residue operator+(Residue const &a, Residue const &b);
  friend Residue operator-(Residue const &a, Residue const &b);
  friend Residue operator*(Residue const &a, Residue const &b);
  friend Residue operator-(Residue const &a);
  friend bool operator==(Residue const &, Residue const &) = default;

private:
  std::int64_t value_;
  std::int64_t modulus_;
};

class ResidueVector
{
public:
  ResidueVector(Index length, std::int64_t modulus);
  ResidueVector(Int64Vector const &coords, std::int64_t modulus);
  ResidueVector(std::initializer_list<std::int64_t> coords, std::int64_t modulus);
  ResidueVector(std::vector<std::int64_t> const &coords, std::int64_t modulus);

  static ResidueVector unit(Index length, Index i, std::int64_t modulus);

  Index size() const noexcept { return coords_.size(); }
  std::int64_t modulus() const noexcept { return modulus_; }
  Int64Vector const &coords() const noexcept { return coords_; }
  std::int64_t operator[](Index i) const { return coords_(i); }
  Residue at(Index i) const { return Residue(coords_(i), modulus_); }

  bool is_zero() const { return coords_.isZero(); }

  // Reduction onto Z/(divisor) for a divisor of the modulus.
  ResidueVector reduced(std::int64_t divisor) const;
  // Sub-vector [start, start + length).
  ResidueVector segment(Index start, Index length) const;
  std::vector<std::int64_t> to_std() const;

  friend ResidueVector operator+(ResidueVector const &a, ResidueVector const &b);
  friend ResidueVector operator-(ResidueVector const &a, ResidueVector const &b);
  friend ResidueVector operator-(ResidueVector const &a);
  friend ResidueVector operator*(std::int64_t c, ResidueVector const &a);
  friend bool operator==(ResidueVector const &a, ResidueVector const &b);

private:
  Int64Vector coords_;
  std::int64_t modulus_;
};

// Concatenation of equal-modulus vectors.
ResidueVector concat(std::vector<ResidueVector> const &parts);

class ResidueMatrix
{
public:
  ResidueMatrix(Index rows, Index cols, std::int64_t modulus);
  ResidueMatrix(Int64Matrix const &entries, std::int64_t modulus);
  ResidueMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                std::int64_t modulus);

  static ResidueMatrix identity(Index size, std::int64_t modulus);
  static ResidueMatrix from_rows(std::vector<ResidueVector> const &rows);
  static ResidueMatrix from_rows(std::vector<std::vector<std::int64_t>> const &rows,
                                 Index cols, std::int64_t modulus);

  Index rows() const noexcept { return entries_.rows(); }
  Index cols() const noexcept { return entries_.cols(); }
  std::int64_t modulus() const noexcept { return modulus_; }
  Int64Matrix const &entries() const noexcept { return entries_; }
  std::int64_t operator()(Index i, Index j) const { return entries_(i, j); }

  ResidueVector row(Index i) const;
  ResidueVector col(Index j) const;
  ResidueMatrix transpose() const;
  bool is_zero() const { return entries_.isZero(); }

  // Copy of *this with `block` written at (row, col).
  ResidueMatrix with_block(Index row, Index col, ResidueMatrix const &block) const;

  friend ResidueMatrix operator+(ResidueMatrix const &a, ResidueMatrix const &b);
  friend ResidueMatrix operator-(ResidueMatrix const &a, ResidueMatrix const &b);
  friend ResidueMatrix operator-(ResidueMatrix const &a);
  friend ResidueMatrix operator*(ResidueMatrix const &a, ResidueMatrix const &b);
  friend ResidueVector operator*(ResidueMatrix const &a, ResidueVector const &x);
  friend ResidueMatrix operator*(std::int64_t c, ResidueMatrix const &a);
  friend bool operator==(ResidueMatrix const &a, ResidueMatrix const &b);

private:
  Int64Matrix entries_;
  std::int64_t modulus_;
};

// Row vector times matrix: u^T M.
ResidueVector left_multiply(ResidueVector const &u, ResidueMatrix const &m);
std::int64_t dot(ResidueVector const &a, ResidueVector const &b);

std::ostream &operator<<(std::ostream &os, Residue const &r);
std::ostream &operator<<(std::ostream &os, ResidueVector const &v);
std::ostream &operator<<(std::ostream &os, ResidueMatrix const &m);

} // namespace braidsplit
