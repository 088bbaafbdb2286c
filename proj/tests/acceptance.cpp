// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "hypercone/hyp7_tables.hpp"
#include "hypercone/linalg.hpp"
#include "hypercone/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace hypercone;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << title << ": " << detail << std::endl;
}

std::string seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << " s";
  return out.str();
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

std::vector<std::size_t> sorted_orbit_sizes_in_order(const IntMatrix& m, int n) {
  std::vector<std::vector<std::int64_t>> order;
  std::map<std::vector<std::int64_t>, std::size_t> count;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const IntVector c = canonical_form(m.row(r).transpose(), n);
    std::vector<std::int64_t> key(c.data(), c.data() + c.size());
    if (count[key]++ == 0) order.push_back(key);
  }
  std::vector<std::size_t> sizes;
  for (const auto& k : order) sizes.push_back(count[k]);
  return sizes;
}

std::size_t cut_count(const VCone& v) {
  std::set<std::vector<std::int64_t>> cuts;
  for (const RayVector& c : generate_cuts(v.points()).rays()) cuts.emplace(c.coords().data(), c.coords().data() + c.size());
  std::size_t k = 0;
  for (const RayVector& r : v.rays()) k += cuts.count({r.coords().data(), r.coords().data() + r.size()});
  return k;
}

// Neighbours of `v` straight from the definition: common zero set of rank dim - 2.
std::vector<std::size_t> neighbors_by_definition(const BitMatrix& zeros, const IntMatrix& dual, std::size_t v,
                                                 std::size_t target) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < zeros.rows(); ++w) {
    if (w == v || zeros.common_count(v, w) < target) continue;
    const auto common = zeros.common(v, w);
    if (integer_rank(dual, common, target) == target) out.push_back(w);
  }
  return out;
}

bool witness_at_distance_three(const BitMatrix& zeros, const IntMatrix& dual, const DiameterResult& d,
                               std::size_t target) {
  const auto a = neighbors_by_definition(zeros, dual, d.from, target);
  const auto b = neighbors_by_definition(zeros, dual, d.to, target);
  std::vector<std::size_t> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  return d.diameter == 3 && d.from != d.to && !std::binary_search(a.begin(), a.end(), d.to) && shared.empty();
}

void criterion_1() {
  const auto start = Clock::now();
  const HCone hyp7 = generate_hyp(7);
  const auto sizes = sorted_orbit_sizes_in_order(hyp7.matrix(), 7);
  const double t = since(start);
  const std::vector<std::size_t> expected = {105, 210, 210, 420, 35, 105, 21, 420, 105, 42, 630, 420, 840, 210};
  report(1, "facet census", hyp7.size() == 3773 && sizes == expected && t < 10,
         std::to_string(hyp7.size()) + " inequalities, orbit sizes " + join(sizes) + ", " + seconds(t));
}

void criterion_2(const Hyp7Analysis& a) {
  bool ok = a.census.subcones.size() == 26;
  std::size_t probes = 0;
  for (const SubconeResult& s : a.census.subcones) {
    const auto cuts = static_cast<std::size_t>(std::count(s.is_cut.begin(), s.is_cut.end(), true));
    ok = ok && s.kept.size() == 21 && s.rays.size() == 21 && cuts == 20;
    probes += s.lp_probes;
  }
  const double t = a.seconds.at("subcones");
  report(2, "subcone structure", ok && t < 3600,
         "26 subcones with 21 facets, 21 rays, 20 cuts each; " + std::to_string(probes) + " LP probes; " + seconds(t) +
             " with stabilizer pruning");
}

void criterion_3(const Hyp7Analysis& a) {
  const CensusReport& c = a.census;
  const std::vector<std::size_t> expected_non_cut = {2520, 2520, 2520, 2520, 1260, 1260, 252,  2520, 2520,
                                                     2520, 2520, 1260, 1260, 630,  2520, 2520, 1260, 840,
                                                     840,  420,  420,  840,  630,  420,  210,  105};
  std::vector<std::size_t> cut_sizes, non_cut_sizes;
  for (std::size_t o = 0; o < c.ray_orbits.orbit_count(); ++o) {
    (o < kCutOrbitCount ? cut_sizes : non_cut_sizes).push_back(c.ray_orbits.orbit_size(o));
  }
  bool extreme = true;
  for (std::size_t o = 0; o < c.ray_orbits.orbit_count(); ++o) {
    const IntVector& r = c.ray_orbits.representative(o);
    const auto tight = tight_set(c.hyp7, RayVector(r));
    extreme = extreme && integer_rank(c.hyp7.matrix(), tight) == 20;
  }
  const bool ok = c.ray_count() == 37170 && c.ray_orbits.orbit_count() == 29 &&
                  cut_sizes == std::vector<std::size_t>{7, 21, 35} && non_cut_sizes == expected_non_cut && extreme;
  report(3, "ray census", ok,
         std::to_string(c.ray_count()) + " rays in " + std::to_string(c.ray_orbits.orbit_count()) +
             " orbits, cut orbits " + join(cut_sizes) + ", representatives extreme: " + (extreme ? "yes" : "no"));
}

void criterion_4(const Hyp7Analysis& a) {
  bool ok = a.correspondence.bijection_matches_table && a.correspondence.violating_orbits.size() == 26;
  for (std::size_t i = 0; ok && i < 26; ++i) {
    ok = a.correspondence.violating_orbits[i] == std::vector<std::size_t>{i + kCutOrbitCount};
  }
  report(4, "correspondence", ok, "O_i violated exactly by orbit R_{i+3} for all 26 rows");
}

void criterion_5(const Hyp7Analysis& a) {
  std::size_t equal_cells = 0;
  for (std::size_t i = 0; i < 29; ++i) {
    for (std::size_t j = 0; j < 14; ++j) equal_cells += a.incidence.counts[i][j] == tables::kIncidence[i][j];
  }
  bool sums = a.incidence.row_sums[0] == 1460 && a.incidence.row_sums[1] == 1490 && a.incidence.row_sums[2] == 1359;
  for (std::size_t i = kCutOrbitCount; i < 29; ++i) sums = sums && a.incidence.row_sums[i] == 20;
  report(5, "incidence", equal_cells == 406 && sums && a.incidence.double_counting_ok,
         std::to_string(equal_cells) + "/406 cells equal, row sums 1460/1490/1359 and 20: " + (sums ? "yes" : "no"));
}

void criterion_6(const Hyp7Analysis& a) {
  const AdjacencyTable& t = a.ray_adjacency;
  bool rows = true;
  for (std::size_t i = 0; i < 29; ++i) {
    for (std::size_t j = 0; j < kCutOrbitCount; ++j) rows = rows && t.counts[i][j] == tables::kRayCutAdjacency[i][j];
    rows = rows && t.totals[i] == tables::kRayAdjacencyTotals[i];
  }
  const bool cut_totals = t.totals[0] == 15662 && t.totals[1] == 12532 && t.totals[2] == 10664;
  bool non_cut = true;
  for (std::size_t i = kCutOrbitCount; i < 29; ++i) {
    non_cut = non_cut && t.totals[i] == 20;
    for (std::size_t j = kCutOrbitCount; j < 29; ++j) non_cut = non_cut && t.counts[i][j] == 0;
  }
  report(6, "ray adjacency", rows && cut_totals && non_cut && t.double_counting_ok,
         std::string("rows equal reference: ") + (rows ? "yes" : "no") + ", totals 15662/12532/10664: " +
             (cut_totals ? "yes" : "no") + ", non-cut totals 20 and non-cut block zero: " + (non_cut ? "yes" : "no"));
}

void criterion_7(const Hyp7Analysis& a) {
  const AdjacencyTable& t = a.facet_adjacency;
  const std::vector<std::int64_t> totals = {1072, 460, 169, 169, 168, 95, 95, 81, 20, 20, 20, 20, 20, 20};
  bool cells = true;
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = 0; j < 14; ++j) cells = cells && t.counts[i][j] == tables::kFacetAdjacency[i][j];
  }
  bool simplex_block = true;
  for (std::size_t i = 8; i < 14; ++i) {
    for (std::size_t j = 8; j < 14; ++j) simplex_block = simplex_block && t.counts[i][j] == 0;
  }
  report(7, "facet adjacency", cells && t.totals == totals && simplex_block && t.double_counting_ok,
         std::string("14x14 equal: ") + (cells ? "yes" : "no") + ", totals " + (t.totals == totals ? "match" : "differ") +
             ", simplex block zero: " + (simplex_block ? "yes" : "no"));
}

void criterion_8(const Hyp7Analysis& a) {
  const CensusReport& c = a.census;
  const DiameterReport& d = a.diameters;
  const IntMatrix& facets = c.hyp7.matrix();
  const bool skeleton = witness_at_distance_three(c.ray_tight, facets, d.skeleton, 19);
  const bool ridge = witness_at_distance_three(c.facet_incident, c.ray_matrix, d.ridge, 19);
  std::ostringstream detail;
  detail << "skeleton " << d.skeleton.diameter << " (R_" << c.ray_orbits.orbit_of(d.skeleton.from) + 1 << " "
         << to_string(c.ray_orbits.member(d.skeleton.from)) << " to R_" << c.ray_orbits.orbit_of(d.skeleton.to) + 1
         << " " << to_string(c.ray_orbits.member(d.skeleton.to)) << "), ridge " << d.ridge.diameter << " (F_"
         << c.facet_orbits.orbit_of(d.ridge.from) + 1 << " to F_" << c.facet_orbits.orbit_of(d.ridge.to) + 1 << ")";
  report(8, "diameters", skeleton && ridge, detail.str());
}

void criterion_9(const Hyp7Analysis& a) {
  const CompletenessReport& c = *a.completeness;
  std::vector<int> orbits = c.matched_orbits;
  std::sort(orbits.begin(), orbits.end());
  std::vector<int> expected(14);
  std::iota(expected.begin(), expected.end(), 0);
  const double t = a.seconds.at("completeness");
  report(9, "completeness sweep", c.complete && orbits == expected && c.facets.size() == 14 && t < 1800,
         std::to_string(c.candidates) + " classes with |b_i| <= 3, " + std::to_string(c.valid) + " valid, " +
             std::to_string(c.facets.size()) + " facets = b^1..b^14, " + seconds(t));
}

void criterion_10(const Hyp7Analysis& a) {
  std::vector<std::size_t> sizes;
  for (const auto& c : a.switching.classes) sizes.push_back(c.size());
  bool blocks = sizes == std::vector<std::size_t>{3, 4, 7, 7, 5};
  std::size_t first = 0;
  for (std::size_t k = 0; blocks && k < a.switching.classes.size(); ++k) {
    std::vector<std::size_t> block(sizes[k]);
    std::iota(block.begin(), block.end(), first);
    blocks = a.switching.classes[k] == block;
    first += sizes[k];
  }

  // Random facets of CUT_7 (hypermetric and non-hypermetric orbits) with a random incident cut.
  std::vector<IntVector> facets;
  for (const Inequality& f : a.census.hyp7.inequalities()) facets.push_back(f.coeffs());
  for (const Inequality& f : cut7_nonhypermetric_representatives()) facets.push_back(f.coeffs());
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, facets.size() - 1);
  std::uniform_int_distribution<std::uint32_t> mask(1, 63);
  std::vector<int> points = {0, 1, 2, 3, 4, 5, 6};
  std::size_t pairs = 0;
  bool involution = true;
  while (pairs < 1000) {
    std::shuffle(points.begin(), points.end(), rng);
    const Inequality f(apply(PointPermutation(points), facets[pick(rng)]));
    const CutSet s = CutSet::from_mask(7, mask(rng));
    if (evaluate(f, cut_vector(s)) != 0) continue;
    const Inequality g = switching(f, s);
    involution = involution && switching(g, s) == f && evaluate(g, cut_vector(s)) == 0;
    ++pairs;
  }
  report(10, "switching", blocks && a.switching.labels_ok && involution,
         std::to_string(sizes.size()) + " classes of sizes " + join(sizes) + " in table block order, involution on " +
             std::to_string(pairs) + " random pairs: " + (involution ? "yes" : "no"));
}

void criterion_11() {
  const auto timed = [](const HCone& h) {
    const auto start = Clock::now();
    VCone v = double_description(h);
    return std::pair{std::move(v), since(start)};
  };
  const auto [hyp5, t5] = timed(generate_hyp(5));

  std::vector<IntVector> reps;
  for (const BVector& b : hyp_facet_representatives(6)) reps.push_back(hypermetric_inequality(b).coeffs());
  const OrbitTable hyp6_orbits(6, reps);
  const HCone hyp6(6, std::vector<Inequality>(hyp6_orbits.members().begin(), hyp6_orbits.members().end()));
  const auto [hyp6_rays, t6] = timed(hyp6);
  const auto [met5, tm] = timed(generate_met(5));

  const bool ok = reps.size() == 4 && hyp5.size() == 15 && cut_count(hyp5) == 15 && hyp6_rays.size() == 31 &&
                  cut_count(hyp6_rays) == 31 && met5.size() == 25 && met5.size() - cut_count(met5) == 10 && t5 < 60 &&
                  t6 < 60 && tm < 60;
  report(11, "desk-scale oracles", ok,
         "HYP_5 " + std::to_string(hyp5.size()) + " cuts (" + seconds(t5) + "), HYP_6 from " +
             std::to_string(hyp6.size()) + " facets -> " + std::to_string(hyp6_rays.size()) + " cuts (" + seconds(t6) +
             "), MET_5 " + std::to_string(met5.size()) + " rays with " +
             std::to_string(met5.size() - cut_count(met5)) + " non-cuts (" + seconds(tm) + ")");
}

void criterion_12() {
  // Hypermetric values on cuts.
  bool identity = true;
  std::size_t identity_checks = 0;
  for (const BVector& b : enumerate_bvectors(7, 3)) {
    for (std::uint32_t m = 1; m < 64; ++m) {
      const CutSet s = CutSet::from_mask(7, m);
      std::int64_t raw = 0;
      for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) raw += s.separates(i, j) ? b[i] * b[j] : 0;
      }
      const std::int64_t w = weight(b, s);
      identity = identity && raw == w * (1 - w);
      ++identity_checks;
    }
  }

  // Orbit-stabilizer, composition, canonical idempotence.
  std::vector<IntVector> samples;
  for (const BVector& b : hyp7_facet_representatives()) samples.push_back(hypermetric_inequality(b).coeffs());
  for (const Inequality& f : cut7_nonhypermetric_representatives()) samples.push_back(f.coeffs());
  for (const RayVector& r : hyp7_cut_representatives()) samples.push_back(r.coords());
  for (const RayVector& r : hyp7_ray_representatives()) samples.push_back(r.coords());
  bool orbit_stabilizer = true;
  for (const IntVector& v : samples) orbit_stabilizer = orbit_stabilizer && orbit(v, 7).size() * stabilizer(v, 7).size() == 5040;

  std::mt19937 rng(99);
  bool composition = true;
  bool idempotent = true;
  std::vector<int> p(7), q(7);
  std::iota(p.begin(), p.end(), 0);
  std::iota(q.begin(), q.end(), 0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::shuffle(p.begin(), p.end(), rng);
    std::shuffle(q.begin(), q.end(), rng);
    const PointPermutation pp(p), qq(q);
    const IntVector& v = samples[static_cast<std::size_t>(trial) % samples.size()];
    composition = composition && equal(apply(pp, apply(qq, v)), apply(pp.compose(qq), v));
    const IntVector c = canonical_form(apply(pp, v), 7);
    idempotent = idempotent && equal(canonical_form(c, 7), c) && equal(c, canonical_form(v, 7));
  }

  // Pruned and unpruned redundancy removal on C_1, spot-checked by full LP probes.
  const HCone hyp7 = build_hyp7();
  const auto start = Clock::now();
  const SubconeResult pruned = solve_subcone(0, hyp7, {true, RedundancyMethod::kIncremental});
  const double t_pruned = since(start);
  const auto start_unpruned = Clock::now();
  const SubconeResult unpruned = solve_subcone(0, hyp7, {false, RedundancyMethod::kIncremental});
  const double t_unpruned = since(start_unpruned);
  std::vector<Inequality> list = hyp7.inequalities();
  list.push_back(cut7_nonhypermetric_representatives()[0]);
  bool spot = true;
  for (std::size_t k : pruned.kept) spot = spot && !is_redundant(7, list, k);
  std::size_t dropped_checked = 0;
  for (std::size_t k = 0; k < list.size() && dropped_checked < 10; k += 97) {
    if (std::binary_search(pruned.kept.begin(), pruned.kept.end(), k)) continue;
    spot = spot && is_redundant(7, list, k);
    ++dropped_checked;
  }
  const bool same = pruned.kept == unpruned.kept;

  report(12, "property suites",
         identity && orbit_stabilizer && composition && idempotent && same && spot,
         std::string("b(S)(1-b(S)) on ") + std::to_string(identity_checks) + " pairs: " + (identity ? "yes" : "no") +
             ", orbit x stabilizer = 5040: " + (orbit_stabilizer ? "yes" : "no") + ", composition: " +
             (composition ? "yes" : "no") + ", canonical idempotent: " + (idempotent ? "yes" : "no") +
             ", C_1 pruned == unpruned: " + (same ? "yes" : "no") + " (" + std::to_string(pruned.lp_probes) +
             " vs " + std::to_string(unpruned.lp_probes) + " probes, " + seconds(t_pruned) + " vs " +
             seconds(t_unpruned) + "), exhaustive LP spot checks: " + (spot ? "yes" : "no"));
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = 1;
  for (int k = 1; k + 1 < argc; ++k) {
    if (std::strcmp(argv[k], "--jobs") == 0) jobs = std::max(1, std::atoi(argv[k + 1]));
  }
  try {
    criterion_1();
    AnalysisOptions options;
    options.jobs = jobs;
    const Hyp7Analysis a = analyze_hyp7(options);
    criterion_2(a);
    criterion_3(a);
    criterion_4(a);
    criterion_5(a);
    criterion_6(a);
    criterion_7(a);
    criterion_8(a);
    criterion_9(a);
    criterion_10(a);
    criterion_11();
    criterion_12();
  } catch (const std::exception& e) {
    std::cout << "FAIL  internal error: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "all 12 criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
