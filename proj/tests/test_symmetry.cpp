#include "hypercone/hypermetric.hpp"
#include "hypercone/symmetry.hpp"

#include <doctest.h>

#include <random>

using namespace hypercone;

namespace {

PointPermutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return PointPermutation(image);
}

IntVector random_vector(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  IntVector v(pair_count(n));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = entry(rng);
  return v;
}

}  // namespace

TEST_CASE("pair indexing is a lexicographic bijection") {
  for (int n = 2; n <= 8; ++n) {
    int expected = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        CHECK(pair_index(n, i, j) == expected);
        CHECK(pair_index(n, j, i) == expected);
        CHECK(pair_at(n, expected) == std::pair{i, j});
        ++expected;
      }
    }
    CHECK(points_for_length(pair_count(n)) == n);
  }
  CHECK_THROWS_AS(points_for_length(4), DimensionError);
}

TEST_CASE("permutations validate and invert") {
  CHECK_THROWS(PointPermutation({0, 0, 1}));
  CHECK_THROWS(PointPermutation({0, 3, 1}));
  const PointPermutation p({2, 0, 1});
  CHECK(p.compose(p.inverse()) == PointPermutation::identity(3));
}

TEST_CASE("relabelling a cut") {
  const IntVector d1 = cut_vector(CutSet(3, {0})).coords();
  CHECK(equal(apply(PointPermutation::identity(3), d1), d1));
  CHECK(equal(apply(PointPermutation({1, 0, 2}), d1), cut_vector(CutSet(3, {1})).coords()));
}

TEST_CASE("group action composition law") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const PointPermutation p = random_permutation(n, rng);
    const PointPermutation q = random_permutation(n, rng);
    const IntVector v = random_vector(n, rng);
    CHECK(equal(apply(p, apply(q, v)), apply(p.compose(q), v)));
  }
}

TEST_CASE("the action commutes with building hypermetric inequalities") {
  std::mt19937 rng(11);
  for (const BVector& b : hyp7_facet_representatives()) {
    const PointPermutation p = random_permutation(7, rng);
    const IntVector lhs = apply(p, hypermetric_inequality(b).coeffs());
    const IntVector rhs = hypermetric_inequality(BVector(apply_to_points(p, b.values()))).coeffs();
    CHECK(equal(lhs, rhs));
  }
}

TEST_CASE("canonical form is idempotent and orbit invariant") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 5;
    const IntVector v = random_vector(n, rng);
    const IntVector c = canonical_form(v, n);
    CHECK(equal(canonical_form(c, n), c));
    CHECK(equal(canonical_form(apply(random_permutation(n, rng), v), n), c));
    CHECK_FALSE(lex_less(v, c));
  }
}

TEST_CASE("orbit-stabilizer product equals 7!") {
  std::vector<IntVector> samples;
  for (const BVector& b : hyp7_facet_representatives()) samples.push_back(hypermetric_inequality(b).coeffs());
  for (const Inequality& f : cut7_nonhypermetric_representatives()) samples.push_back(f.coeffs());
  for (const RayVector& r : hyp7_ray_representatives()) samples.push_back(r.coords());
  for (const IntVector& v : samples) {
    CHECK(orbit(v, 7).size() * stabilizer(v, 7).size() == 5040);
  }
}

TEST_CASE("orbit and stabilizer examples") {
  const auto b = hyp7_facet_representatives();
  CHECK(orbit(hypermetric_inequality(b[0]).coeffs(), 7).size() == 105);
  CHECK(orbit(hypermetric_inequality(b[6]).coeffs(), 7).size() == 21);
  CHECK(stabilizer(IntVector(IntVector::Ones(21)), 7).size() == 5040);
  CHECK(stabilizer(cut_vector(CutSet(7, {0, 1, 2})).coords(), 7).size() == 144);
  CHECK(stabilizer(cut7_nonhypermetric_representatives()[0].coeffs(), 7).size() == 2);
}

TEST_CASE("symmetric group is closed") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(4).is_closed());
  CHECK(symmetric_group(7).order() == 5040);
  CHECK_THROWS_AS(orbit_transversal({}, PermutationGroup(3, {PointPermutation({1, 0, 2}), PointPermutation({0, 2, 1})})),
                  GroupNotClosedError);
}

TEST_CASE("orbit transversal of the cuts") {
  const VCone cuts = generate_cuts(7);
  std::vector<IntVector> items;
  for (const RayVector& r : cuts.rays()) items.push_back(r.coords());
  const Transversal t = orbit_transversal(items, symmetric_group(7));
  CHECK(t.representatives.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& m : t.members) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{7, 21, 35});

  const PermutationGroup trivial(7, {PointPermutation::identity(7)});
  CHECK(orbit_transversal(items, trivial).representatives.size() == items.size());
}

TEST_CASE("orbit transversal under the stabilizer of O_1") {
  const auto stab = stabilizer(cut7_nonhypermetric_representatives()[0].coeffs(), 7);
  const PermutationGroup group(7, stab);
  const HCone hyp7 = generate_hyp(7);
  std::vector<IntVector> items;
  for (const Inequality& f : hyp7.inequalities()) items.push_back(f.coeffs());
  const Transversal t = orbit_transversal(items, group);
  // Orbits of an order-2 group have size 1 or 2.
  std::size_t fixed = 0;
  for (const auto& m : t.members) fixed += m.size() == 1;
  CHECK(t.representatives.size() == (items.size() + fixed) / 2);
  CHECK(t.representatives.size() > items.size() / 2);
}

TEST_CASE("orbit table transporters map representatives onto members") {
  const auto reps = hyp7_cut_representatives();
  OrbitTable table(7, {reps[0].coords(), reps[1].coords(), reps[2].coords()});
  CHECK(table.member_count() == 63);
  const auto& g = symmetric_group(7);
  for (std::size_t k = 0; k < table.member_count(); ++k) {
    CHECK(equal(g.apply(table.transporter(k), table.representative(table.orbit_of(k))), table.member(k)));
    CHECK(table.find(table.member(k)) == k);
  }
  CHECK_THROWS(OrbitTable(7, {reps[0].coords(), cut_vector(CutSet(7, {3})).coords()}));
}
