#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include "braidsplit/residue.hpp"

namespace braidsplit {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = DenseMatrix<BigInt>;
using IntegerVector = DenseVector<BigInt>;

// Dense product by explicit loops. Eigen's product kernels trip over
// Boost.Multiprecision constructor overloads, so big-integer products go here.
template <typename Scalar>
DenseMatrix<Scalar> multiply(DenseMatrix<Scalar> const &a, DenseMatrix<Scalar> const &b)
{
  DenseMatrix<Scalar> out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      Scalar acc = 0;
      for (Index k = 0; k < a.cols(); ++k)
        acc += a(i, k) * b(k, j);
      out(i, j) = std::move(acc);
    }
  return out;
}

template <typename Scalar>
DenseVector<Scalar> multiply(DenseMatrix<Scalar> const &a, DenseVector<Scalar> const &x)
{
  DenseVector<Scalar> out(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    Scalar acc = 0;
    for (Index k = 0; k < a.cols(); ++k)
      acc += a(i, k) * x(k);
    out(i) = std::move(acc);
  }
  return out;
}

// Canonical lifts into [0, q) as integers.
IntegerMatrix lift(ResidueMatrix const &m);
IntegerVector lift(ResidueVector const &v);

// Reduction of arbitrary integers modulo q.
ResidueMatrix reduce(IntegerMatrix const &m, std::int64_t q);
ResidueVector reduce(IntegerVector const &v, std::int64_t q);

std::int64_t reduce_mod(BigInt const &v, std::int64_t q);

} // namespace braidsplit
