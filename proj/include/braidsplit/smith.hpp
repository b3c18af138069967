#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "braidsplit/integer_matrix.hpp"

namespace braidsplit {

// Unbounded exact integers only: fixed-width scalars would overflow silently
// on intermediate SNF entries.
template <typename Scalar>
concept ExactInteger = std::numeric_limits<Scalar>::is_specialized &&
                       std::numeric_limits<Scalar>::is_integer &&
                       !std::numeric_limits<Scalar>::is_bounded;

/// U * M * V = D with U, V unimodular and D diagonal, nonnegative, each
/// diagonal entry dividing the next.
template <ExactInteger Scalar>
struct SmithDecomposition
{
  using Matrix = DenseMatrix<Scalar>;

  Matrix U;
  Matrix D;
  Matrix V;

  Index rows() const { return D.rows(); }
  Index cols() const { return D.cols(); }

  // Number of nonzero invariant factors.
  Index rank() const
  {
    Index r = 0;
    for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i)
      if (D(i, i) != 0)
        ++r;
    return r;
  }

  std::vector<Scalar> invariant_factors() const
  {
    std::vector<Scalar> out;
    for (Index i = 0; i < std::min(D.rows(), D.cols()); ++i)
      out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(Scalar const &x)
{
  return x < 0 ? Scalar(-x) : x;
}

template <typename Matrix>
void swap_rows(Matrix &m, Index a, Index b)
{
  if (a != b)
    m.row(a).swap(m.row(b));
}

template <typename Matrix>
void swap_cols(Matrix &m, Index a, Index b)
{
  if (a != b)
    m.col(a).swap(m.col(b));
}

// row[target] += factor * row[source], applied to work and its transform.
template <typename Matrix, typename Scalar>
void add_row(Matrix &m, Index target, Index source, Scalar const &factor)
{
  for (Index j = 0; j < m.cols(); ++j)
    m(target, j) += factor * m(source, j);
}

template <typename Matrix, typename Scalar>
void add_col(Matrix &m, Index target, Index source, Scalar const &factor)
{
  for (Index i = 0; i < m.rows(); ++i)
    m(i, target) += factor * m(i, source);
}

template <typename Matrix>
void negate_row(Matrix &m, Index r)
{
  for (Index j = 0; j < m.cols(); ++j)
    m(r, j) = -m(r, j);
}

// Nonzero entry of least magnitude in the trailing block starting at (t, t);
// ties go to the lowest (row, col) in row-major order.
template <typename Matrix>
std::optional<std::pair<Index, Index>> smallest_pivot(Matrix const &a, Index t)
{
  std::optional<std::pair<Index, Index>> best;
  typename Matrix::Scalar best_mag = 0;
  for (Index i = t; i < a.rows(); ++i)
    for (Index j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0)
        continue;
      auto mag = magnitude(a(i, j));
      if (!best || mag < best_mag) {
        best = {i, j};
        best_mag = mag;
      }
    }
  return best;
}

} // namespace detail

/// Smith normal form by deterministic elementary operations. Total: zero and
/// non-square inputs are fine.
template <typename Derived>
  requires ExactInteger<typename Derived::Scalar>
SmithDecomposition<typename Derived::Scalar>
smith_normal_form(Eigen::MatrixBase<Derived> const &input)
{
  using Scalar = typename Derived::Scalar;
  using Matrix = DenseMatrix<Scalar>;

  Index const rows = input.rows();
  Index const cols = input.cols();
  Matrix a = input;
  Matrix u = Matrix::Identity(rows, rows);
  Matrix v = Matrix::Identity(cols, cols);

  for (Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      auto pivot = detail::smallest_pivot(a, t);
      if (!pivot)
        break;
      auto [pi, pj] = *pivot;
      detail::swap_rows(a, t, pi);
      detail::swap_rows(u, t, pi);
      detail::swap_cols(a, t, pj);
      detail::swap_cols(v, t, pj);

      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0)
          continue;
        Scalar factor = -(a(i, t) / a(t, t));
        detail::add_row(a, i, t, factor);
        detail::add_row(u, i, t, factor);
        if (a(i, t) != 0)
          clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0)
          continue;
        Scalar factor = -(a(t, j) / a(t, t));
        detail::add_col(a, j, t, factor);
        detail::add_col(v, j, t, factor);
        if (a(t, j) != 0)
          clean = false;
      }
      if (!clean)
        continue;

      // Row t and column t are clear; enforce divisibility of the rest.
      std::optional<Index> offending;
      for (Index i = t + 1; i < rows && !offending; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending)
        break;
      detail::add_row(a, t, *offending, Scalar(1));
      detail::add_row(u, t, *offending, Scalar(1));
    }
    if (a(t, t) < 0) {
      detail::negate_row(a, t);
      detail::negate_row(u, t);
    }
  }

  return {std::move(u), std::move(a), std::move(v)};
}

} // namespace braidsplit
