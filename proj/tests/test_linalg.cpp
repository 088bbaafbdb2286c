#include "hypercone/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace hypercone;

namespace {

IntMatrix rows_of(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) m.row(i++) = make_int_vector(r).transpose();
  return m;
}

}  // namespace

TEST_CASE("rank of small integer matrices") {
  CHECK(rank(IntMatrix(IntMatrix::Identity(3, 3))) == 3);
  CHECK(rank(rows_of({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}})) == 3);
  CHECK(rank(rows_of({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})) == 2);
  CHECK(rank(IntMatrix(IntMatrix::Zero(4, 5))) == 0);
}

TEST_CASE("rank over the rationals clears denominators") {
  RationalMatrix m(2, 2);
  m << Rational(1, 2), Rational(1, 3), Rational(3, 2), Rational(1);
  CHECK(rank(m) == 1);
  m(1, 1) = Rational(2);
  CHECK(rank(m) == 2);
}

TEST_CASE("nullspace of small matrices") {
  CHECK(solve_homogeneous(IntMatrix(IntMatrix::Identity(2, 2))).empty());

  const auto basis = solve_homogeneous(rows_of({{1, -1}}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0](0) == basis[0](1));
  CHECK(basis[0](0) != 0);

  const IntMatrix m = rows_of({{1, 2, 3, 4}, {0, 1, 1, 1}});
  const auto kernel = solve_homogeneous(m);
  REQUIRE(kernel.size() == 2);
  for (const auto& k : kernel) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Rational acc = 0;
      for (Eigen::Index j = 0; j < m.cols(); ++j) acc += Rational(m(i, j)) * k(j);
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("primitive integer vectors") {
  RationalVector v(3);
  v << Rational(-1, 2), Rational(3, 4), Rational(0);
  const IntVector p = primitive_int64(v);
  CHECK(equal(p, make_int_vector({-2, 3, 0})));

  RationalVector w(2);
  w << Rational(-6), Rational(-4);
  CHECK(equal(primitive_int64(w), make_int_vector({-3, -2})));
}

TEST_CASE("dot product rejects length mismatch and overflow") {
  CHECK_THROWS_AS(dot(make_int_vector({1, 2}), make_int_vector({1, 2, 3})), DimensionError);
  const IntVector big = make_int_vector({INT64_MAX / 2 + 1, INT64_MAX / 2 + 1});
  CHECK_THROWS_AS(dot(big, make_int_vector({1, 1})), OverflowError);
}

TEST_CASE("integer_rank agrees with Bareiss on random matrices") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> size(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = size(rng);
    const int cols = size(rng);
    const int true_rank = std::uniform_int_distribution<int>(0, std::min(rows, cols))(rng);
    // Low-rank product so that rank deficiency is the common case.
    IntMatrix a(rows, true_rank), b(true_rank, cols);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = entry(rng);
    for (Eigen::Index i = 0; i < b.size(); ++i) b.data()[i] = entry(rng);
    const IntMatrix m = true_rank == 0 ? IntMatrix(IntMatrix::Zero(rows, cols)) : IntMatrix(a * b);
    const std::size_t exact = rank(m);
    CHECK(integer_rank(m) == exact);
    std::vector<std::size_t> all(static_cast<std::size_t>(rows));
    std::iota(all.begin(), all.end(), std::size_t{0});
    CHECK(integer_rank(m, all, 2) == std::min<std::size_t>(exact, 2));
  }
}

TEST_CASE("integer_rank is exact where a single prime is not") {
  // Rows are independent over Q but dependent modulo 2^31 - 1.
  const std::int64_t p = 2147483647;
  const IntMatrix m = rows_of({{1, 0}, {p, 0}, {0, p}});
  CHECK(integer_rank(m) == 2);
  const IntMatrix single = rows_of({{p, 2 * p}});
  CHECK(integer_rank(single) == 1);
}
