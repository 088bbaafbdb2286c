// Pipeline pieces that do not need the full 26-subcone run.

#include "hypercone/pipeline.hpp"

#include <doctest.h>

#include <atomic>

using namespace hypercone;

TEST_CASE("HYP_7 facet orbits") {
  const OrbitTable t = hyp7_facet_orbits();
  const std::vector<std::size_t> expected = {105, 210, 210, 420, 35, 105, 21, 420, 105, 42, 630, 420, 840, 210};
  REQUIRE(t.orbit_count() == expected.size());
  for (std::size_t o = 0; o < expected.size(); ++o) CHECK(t.orbit_size(o) == expected[o]);
  const HCone hyp7 = build_hyp7();
  CHECK(hyp7.size() == 3773);
  for (std::size_t k = 0; k < hyp7.size(); ++k) CHECK(equal(hyp7[k].coeffs(), t.member(k)));
}

TEST_CASE("subcones C_1 and C_26") {
  const HCone hyp7 = build_hyp7();
  const auto reps = hyp7_ray_representatives();
  for (std::size_t i : {std::size_t{0}, std::size_t{25}}) {
    const SubconeResult s = solve_subcone(i, hyp7);
    CHECK(s.kept.size() == 21);
    CHECK(s.rays.size() == 21);
    CHECK(std::count(s.is_cut.begin(), s.is_cut.end(), true) == 20);
    CHECK(std::find(s.kept.begin(), s.kept.end(), 3773) != s.kept.end());
    CHECK(equal(canonical_form(s.non_cut_ray().coords(), 7), canonical_form(reps[i].coords(), 7)));
    // Each ray is tight on every surviving facet but its opposite one.
    for (std::size_t r = 0; r < s.rays.size(); ++r) {
      for (std::size_t f = 0; f < s.facets.size(); ++f) {
        const std::int64_t v = evaluate(s.facets[f], s.rays[r]);
        CHECK((r == f ? v < 0 : v == 0));
      }
    }
  }
}

TEST_CASE("switching classes") {
  const SwitchingClasses s = switching_classes();
  REQUIRE(s.classes.size() == 5);
  std::vector<std::size_t> sizes;
  for (const auto& c : s.classes) sizes.push_back(c.size());
  CHECK(sizes == std::vector<std::size_t>{3, 4, 7, 7, 5});
  CHECK(s.classes.back() == std::vector<std::size_t>{21, 22, 23, 24, 25});
  CHECK(s.labels_ok);
}

TEST_CASE("simplex facets as faces of a triangle and a CUT_7 facet") {
  for (const FaceWitness& w : simplex_face_decomposition()) {
    CHECK(w.ok);
    CHECK(w.incident_cuts == 19);
    CHECK(w.matching_cut7_orbits == std::vector<std::size_t>{w.expected_cut7_orbit});
  }
}

TEST_CASE("bit matrices") {
  BitMatrix m(3, 130);
  m.set(0, 1);
  m.set(0, 64);
  m.set(0, 129);
  m.set(1, 64);
  m.set(1, 129);
  CHECK(m.count(0) == 3);
  CHECK(m.common_count(0, 1) == 2);
  CHECK(m.common(0, 1) == std::vector<std::size_t>{64, 129});
  CHECK(m.ones(2).empty());
  CHECK(m.test(1, 129));
  CHECK_FALSE(m.test(1, 1));
}

TEST_CASE("parallel_for visits every index and rethrows") {
  for (int jobs : {1, 3}) {
    std::vector<std::atomic<int>> seen(100);
    parallel_for(seen.size(), jobs, [&](std::size_t i) { ++seen[i]; });
    CHECK(std::all_of(seen.begin(), seen.end(), [](const auto& x) { return x == 1; }));
    CHECK_THROWS_AS(parallel_for(10, jobs, [](std::size_t i) {
                      if (i == 7) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
  }
}
