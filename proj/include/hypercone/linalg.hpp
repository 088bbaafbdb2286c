#pragma once

// Exact rank and nullspace computations.
//
// `rank` and `solve_homogeneous` accept any Eigen expression whose scalar is
// an integer type or Rational. Integer inputs go through fraction-free
// (Bareiss) elimination; rational inputs are row-scaled to integers first.
// `integer_rank` is the workhorse for large tight-set matrices: modular
// elimination gives a lower bound, an exact nullspace certificate confirms it.

#include "hypercone/scalar.hpp"

#include <limits>
#include <type_traits>
#include <vector>

namespace hypercone {

namespace detail {

template <typename Scalar>
BigInt to_bigint(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, BigInt>) {
    return x;
  } else {
    return BigInt(x);
  }
}

/// Copies `m` into a BigInt matrix, clearing denominators row by row.
template <typename Derived>
BigIntMatrix integral_rows(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  BigIntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      BigInt lcm = 1;
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        BigInt den = boost::multiprecision::denominator(m(i, j));
        lcm = boost::multiprecision::lcm(lcm, den);
      }
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        const Rational& q = m(i, j);
        out(i, j) = boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q));
      }
    } else {
      for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = to_bigint(m(i, j));
    }
  }
  return out;
}

}  // namespace detail

/// Bareiss elimination in place; returns the rank. Rows are permuted.
std::size_t bareiss_rank_inplace(BigIntMatrix& m);

/// Exact rank over the rationals.
template <typename Derived>
std::size_t rank(const Eigen::MatrixBase<Derived>& m) {
  BigIntMatrix work = detail::integral_rows(m);
  return bareiss_rank_inplace(work);
}

/// Basis of the right nullspace {x : m x = 0}. Empty iff rank == cols.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

template <typename Derived>
std::vector<RationalVector> solve_homogeneous(const Eigen::MatrixBase<Derived>& m) {
  RationalMatrix q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  }
  return nullspace_basis(q);
}

/// Scales a rational vector to the primitive integer vector on the same ray.
Vector<BigInt> primitive_integer(const RationalVector& v);

/// Primitive integer vector converted to int64; throws OverflowError otherwise.
IntVector primitive_int64(const RationalVector& v);

/// Exact rank of the sub-matrix of `m` formed by `rows`, capped at `stop_at`.
///
/// Returns min(rank, stop_at). A modular elimination that reaches `stop_at`
/// is already a proof (rank over Q is never below rank mod p); otherwise the
/// candidate rank is certified by checking every row against an exact integer
/// nullspace of the modular basis rows, with a Bareiss fallback.
std::size_t integer_rank(const IntMatrix& m, std::span<const std::size_t> rows,
                         std::size_t stop_at = std::numeric_limits<std::size_t>::max());

/// Exact rank of all rows of `m`.
std::size_t integer_rank(const IntMatrix& m);

}  // namespace hypercone
