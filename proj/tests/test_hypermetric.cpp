#include "hypercone/hypermetric.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace hypercone;

namespace {

std::size_t orbit_count(const std::vector<IntVector>& items, int n) {
  std::set<std::vector<std::int64_t>> canon;
  for (const IntVector& v : items) {
    const IntVector c = canonical_form(v, n);
    canon.emplace(c.data(), c.data() + c.size());
  }
  return canon.size();
}

template <typename Range>
std::vector<IntVector> vectors_of(const Range& range) {
  std::vector<IntVector> out;
  for (const auto& x : range) {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Inequality>) {
      out.push_back(x.coeffs());
    } else {
      out.push_back(x.coords());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("b-vectors") {
  CHECK_THROWS_AS(BVector({1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BVector({1, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
  const BVector b{2, 2, 1, 1, -1, -1, -3};
  CHECK(b.size() == 7);
  CHECK(b.max_abs() == 3);
}

TEST_CASE("cut sets are stored without the last point") {
  const CutSet s(5, {4, 1});
  CHECK(s == CutSet(5, {0, 2, 3}));
  CHECK(s.label() == "{1,3,4}");
  CHECK(s.separates(0, 1));
  CHECK_FALSE(s.separates(0, 2));
  CHECK_THROWS(CutSet(5, {}));
  CHECK_THROWS(CutSet(5, {0, 1, 2, 3, 4}));
}

TEST_CASE("hypermetric inequality examples") {
  const Inequality t = hypermetric_inequality(BVector{1, 1, -1, 0, 0, 0, 0});
  IntVector expected = IntVector::Zero(21);
  expected(pair_index(7, 0, 1)) = 1;
  expected(pair_index(7, 0, 2)) = -1;
  expected(pair_index(7, 1, 2)) = -1;
  CHECK(equal(t.coeffs(), expected));

  const Inequality p = hypermetric_inequality(BVector{1, 1, 1, 1, -1, -1, -1});
  for (int i = 0; i < 7; ++i) {
    for (int j = i + 1; j < 7; ++j) {
      const bool same_side = (i < 4) == (j < 4);
      CHECK(p.coeffs()(pair_index(7, i, j)) == (same_side ? 1 : -1));
    }
  }
}

TEST_CASE("hypermetric values on cuts: b(S)(1 - b(S))") {
  for (int n = 3; n <= 7; ++n) {
    for (const BVector& b : enumerate_bvectors(n, 2)) {
      const IntVector raw = [&] {
        IntVector h(pair_count(n));
        for (int i = 0; i < n; ++i) {
          for (int j = i + 1; j < n; ++j) h(pair_index(n, i, j)) = b[i] * b[j];
        }
        return h;
      }();
      for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
        const CutSet s = CutSet::from_mask(n, mask);
        const std::int64_t w = weight(b, s);
        CHECK(dot(raw, cut_vector(s).coords()) == w * (1 - w));
        CHECK(evaluate(hypermetric_inequality(b), cut_vector(s)) <= 0);
      }
    }
  }
}

TEST_CASE("cut generation") {
  const VCone c3 = generate_cuts(3);
  REQUIRE(c3.size() == 3);
  CHECK(std::any_of(c3.rays().begin(), c3.rays().end(),
                    [](const RayVector& r) { return equal(r.coords(), make_int_vector({1, 1, 0})); }));
  CHECK(equal(cut_vector(CutSet(3, {0})).coords(), make_int_vector({1, 1, 0})));
  for (int n = 3; n <= 8; ++n) {
    const VCone c = generate_cuts(n);
    CHECK(c.size() == (std::size_t{1} << (n - 1)) - 1);
    CHECK(orbit_count(vectors_of(c.rays()), n) == static_cast<std::size_t>(n / 2));
  }
  CHECK(orbit(cut_vector(CutSet(7, {2, 5})).coords(), 7).size() == 21);
  CHECK_THROWS(generate_cuts(2));
  CHECK_THROWS(generate_cuts(9));
}

TEST_CASE("metric and hypermetric generation") {
  CHECK(generate_met(3).size() == 3);
  CHECK(generate_met(5).size() == 30);
  const HCone met7 = generate_met(7);
  CHECK(met7.size() == 105);
  CHECK(orbit_count(vectors_of(met7.inequalities()), 7) == 1);

  const std::vector<std::size_t> sizes = {3, 12, 40, 210, 3773};
  for (int n = 3; n <= 7; ++n) CHECK(generate_hyp(n).size() == sizes[static_cast<std::size_t>(n - 3)]);
  CHECK(hyp_facet_representatives(6).size() == 4);
}

TEST_CASE("built-in HYP_7 data") {
  const auto b = hyp7_facet_representatives();
  REQUIRE(b.size() == 14);
  CHECK(b[0] == BVector{1, 1, -1, 0, 0, 0, 0});
  CHECK(b[10] == BVector{2, 2, 1, 1, -1, -1, -3});
  std::set<std::vector<std::int64_t>> all;
  for (const BVector& bk : b) {
    for (const IntVector& v : orbit(hypermetric_inequality(bk).coeffs(), 7)) all.emplace(v.data(), v.data() + v.size());
  }
  CHECK(all.size() == 3773);

  const auto o = cut7_nonhypermetric_representatives();
  REQUIRE(o.size() == 26);
  CHECK(equal(o[0].coeffs(), make_int_vector({-1, -1, 0, 0, 1, 1, -1, 0, 1, 0, 1, 1, 0, 1, 0, 1, -1, 1, 1, -1, 0})));
  CHECK(equal(o[21].coeffs(),
              make_int_vector({-1, -1, -2, 1, 2, 3, -1, -2, 1, 2, 3, -2, 1, 2, 3, 2, 3, 5, -2, -3, -5})));
  const VCone cuts = generate_cuts(7);
  for (const Inequality& f : o) {
    std::size_t incident = 0;
    for (const RayVector& c : cuts.rays()) {
      CHECK(evaluate(f, c) >= 0);
      incident += evaluate(f, c) == 0;
    }
    CHECK(incident >= 20);
  }

  const auto r = hyp7_ray_representatives();
  REQUIRE(r.size() == 26);
  CHECK(equal(r[0].coords(), make_int_vector({2, 2, 2, 2, 1, 1, 2, 1, 1, 2, 1, 1, 1, 1, 2, 1, 2, 1, 1, 2, 2})));
  CHECK(equal(r[25].coords(), make_int_vector({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 1, 1, 2})));
  // Each O_i is violated by its paired ray.
  for (std::size_t i = 0; i < 26; ++i) CHECK(evaluate(o[i], r[i]) < 0);
}

TEST_CASE("switching examples") {
  const auto o = cut7_nonhypermetric_representatives();
  CHECK(switching(o[0], CutSet(7, {2, 4, 5})) == o[1]);
  CHECK(switching(o[7], CutSet(7, {4})) == o[9]);
  const CutSet s37(7, {2, 6});
  CHECK(switching(switching(o[3], s37), s37) == o[3]);
  // A cut off the facet is rejected.
  for (std::uint32_t mask = 1; mask < 64; ++mask) {
    const CutSet s = CutSet::from_mask(7, mask);
    if (evaluate(o[0], cut_vector(s)) != 0) {
      CHECK_THROWS_AS(switching(o[0], s), NotIncidentError);
      break;
    }
  }
}

TEST_CASE("switching is an involution on random incident pairs") {
  std::mt19937 rng(1009);
  const auto o = cut7_nonhypermetric_representatives();
  std::uniform_int_distribution<std::size_t> pick(0, o.size() - 1);
  std::uniform_int_distribution<std::uint32_t> mask(1, 63);
  int checked = 0;
  while (checked < 200) {
    const Inequality f(apply(PointPermutation([&] {
                               std::vector<int> p{0, 1, 2, 3, 4, 5, 6};
                               std::shuffle(p.begin(), p.end(), rng);
                               return p;
                             }()),
                             o[pick(rng)].coeffs()));
    const CutSet s = CutSet::from_mask(7, mask(rng));
    if (evaluate(f, cut_vector(s)) != 0) continue;
    const Inequality g = switching(f, s);
    CHECK(evaluate(g, cut_vector(s)) == 0);
    CHECK(switching(g, s) == f);
    ++checked;
  }
}

TEST_CASE("path metrics of graphs") {
  CHECK(equal(path_metric(SimpleGraph::complete(7)).coords(), IntVector(IntVector::Ones(21))));

  const SimpleGraph k7_p3 = SimpleGraph::complete(7).without({{0, 1}, {1, 2}});
  const IntVector d = path_metric(k7_p3).coords();
  CHECK(d(pair_index(7, 0, 1)) == 2);
  CHECK(d(pair_index(7, 1, 2)) == 2);
  CHECK(d.sum() == 23);
  const auto r = hyp7_ray_representatives();
  CHECK(equal(canonical_form(d, 7), canonical_form(r[25].coords(), 7)));

  const SimpleGraph k7_c5 = SimpleGraph::complete(7).without({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(equal(canonical_form(path_metric(k7_c5).coords(), 7), canonical_form(r[6].coords(), 7)));

  CHECK_THROWS(path_metric(SimpleGraph(3, {{0, 1}})));
  CHECK_THROWS(SimpleGraph(3, {{0, 1}, {1, 0}}));
  CHECK_THROWS(SimpleGraph(3, {{1, 1}}));
}

TEST_CASE("Lovasz bound") {
  CHECK(lovasz_bound(2) == Rational(4, 3));
  CHECK(lovasz_bound(7) == Rational(5040 * 128, 3432));
}

TEST_CASE("b-vector enumeration") {
  const auto b3 = enumerate_bvectors(3, 1);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0] == BVector{1, 1, -1});

  const auto b5 = enumerate_bvectors(5, 2);
  CHECK(std::find(b5.begin(), b5.end(), BVector{1, 1, 1, -1, -1}) != b5.end());

  const auto b7 = enumerate_bvectors(7, 3);
  for (const BVector& bk : hyp7_facet_representatives()) {
    IntVector sorted = bk.values();
    std::sort(sorted.data(), sorted.data() + sorted.size(), std::greater<>());
    CHECK(std::find(b7.begin(), b7.end(), BVector(sorted)) != b7.end());
  }
  for (std::size_t k = 0; k < b7.size(); ++k) {
    const IntVector& v = b7[k].values();
    CHECK(std::is_sorted(v.data(), v.data() + v.size(), std::greater<>()));
    if (k) CHECK(lex_less(v, b7[k - 1].values()));
  }
}
