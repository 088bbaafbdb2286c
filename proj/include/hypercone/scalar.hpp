#pragma once

// Exact scalar types and the dense vector/matrix aliases used across the
// library. Everything integral is stored as int64 with checked arithmetic;
// anything that can grow (eliminations, LP tableaux) uses BigInt/Rational.

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypercone {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;
using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;
using BigIntMatrix = Matrix<BigInt>;

/// Raised when an int64 computation would overflow.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when operands of a vector operation have different lengths.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::int64_t checked_narrow(__int128 value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw OverflowError("int64 overflow");
  }
  return static_cast<std::int64_t>(value);
}

/// Exact dot product of two integer vectors.
template <typename DerivedA, typename DerivedB>
std::int64_t dot(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.size() != b.size()) {
    throw DimensionError("dot: length " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  __int128 acc = 0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    acc += static_cast<__int128>(a(k)) * static_cast<__int128>(b(k));
  }
  return checked_narrow(acc);
}

/// gcd of the absolute values of the entries; 0 for the zero vector.
template <typename Derived>
std::int64_t content(const Eigen::MatrixBase<Derived>& v) {
  std::int64_t g = 0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    g = std::gcd(g, static_cast<std::int64_t>(v(k)));
  }
  return g;
}

inline bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

inline bool equal(const IntVector& a, const IntVector& b) {
  return a.size() == b.size() && std::equal(a.data(), a.data() + a.size(), b.data());
}

struct LexLess {
  bool operator()(const IntVector& a, const IntVector& b) const { return lex_less(a, b); }
};

struct VectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      h ^= static_cast<std::size_t>(v(k)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct VectorEqual {
  bool operator()(const IntVector& a, const IntVector& b) const noexcept { return equal(a, b); }
};

inline IntVector make_int_vector(std::span<const int> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t k = 0; k < values.size(); ++k) v(static_cast<Eigen::Index>(k)) = values[k];
  return v;
}

inline IntVector make_int_vector(std::initializer_list<std::int64_t> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (auto x : values) v(k++) = x;
  return v;
}

std::string to_string(const IntVector& v);

}  // namespace hypercone
