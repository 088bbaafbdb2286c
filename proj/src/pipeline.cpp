#include "hypercone/pipeline.hpp"

#include "hypercone/hyp7_tables.hpp"
#include "hypercone/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace hypercone {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

using Int32Matrix = Eigen::Matrix<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::unordered_set<IntVector, VectorHash, VectorEqual> cut_set_7() {
  std::unordered_set<IntVector, VectorHash, VectorEqual> out;
  const VCone cuts = generate_cuts(kPoints);
  for (const auto& r : cuts.rays()) out.insert(r.coords());
  return out;
}

std::size_t representative_member(const OrbitTable& t, std::size_t orbit) {
  return *t.find(t.representative(orbit));
}

}  // namespace

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

OrbitTable hyp7_facet_orbits() {
  std::vector<IntVector> reps;
  for (const BVector& b : hyp7_facet_representatives()) reps.push_back(hypermetric_inequality(b).coeffs());
  return OrbitTable(kPoints, std::move(reps));
}

HCone build_hyp7() {
  const OrbitTable orbits = hyp7_facet_orbits();
  return HCone(kPoints, std::vector<Inequality>(orbits.members().begin(), orbits.members().end()));
}

SubconeResult solve_subcone(std::size_t index, const HCone& hyp7, const SubconeOptions& options) {
  if (index >= kSubconeCount) throw std::out_of_range("solve_subcone: index must be below 26");
  const auto start = Clock::now();
  const Inequality facet = cut7_nonhypermetric_representatives()[index];
  std::vector<Inequality> list = hyp7.inequalities();
  list.push_back(facet);
  const HCone cone(kPoints, std::move(list));

  SubconeResult out;
  out.index = index;
  const PermutationGroup group(kPoints, stabilizer(facet.coeffs(), kPoints));
  out.stabilizer_order = group.order();
  RedundancyOptions redundancy;
  redundancy.method = options.method;
  if (options.prune) redundancy.group = &group;
  if (options.method == RedundancyMethod::kIncremental) {
    redundancy.interior = interior_point(cone);
    if (!redundancy.interior) throw PipelineError("subcone " + std::to_string(index + 1) + " is not full-dimensional");
  }
  RedundancyResult reduced = remove_redundancy(cone, redundancy);
  out.lp_probes = reduced.lp_probes;
  out.kept = reduced.kept;
  out.facets = reduced.cone.inequalities();
  const auto dim = static_cast<std::size_t>(cone.dim());
  if (out.facets.size() != dim) {
    throw PipelineError("subcone " + std::to_string(index + 1) + ": " + std::to_string(out.facets.size()) +
                        " non-redundant inequalities, expected " + std::to_string(dim));
  }

  // The subcone is a simplex: the ray opposite facet k spans the kernel of the others.
  const auto cuts = cut_set_7();
  const IntMatrix& m = reduced.cone.matrix();
  for (std::size_t k = 0; k < dim; ++k) {
    RationalMatrix others(static_cast<Eigen::Index>(dim - 1), cone.dim());
    Eigen::Index r = 0;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j == k) continue;
      for (Eigen::Index c = 0; c < cone.dim(); ++c) others(r, c) = Rational(m(static_cast<Eigen::Index>(j), c));
      ++r;
    }
    const auto kernel = solve_homogeneous(others);
    if (kernel.size() != 1) {
      throw PipelineError("subcone " + std::to_string(index + 1) + ": kernel dimension " +
                          std::to_string(kernel.size()) + " opposite facet " + std::to_string(k));
    }
    IntVector v = primitive_int64(kernel.front());
    const std::int64_t own = dot(m.row(static_cast<Eigen::Index>(k)), v);
    if (own == 0) throw PipelineError("subcone " + std::to_string(index + 1) + ": degenerate simplex");
    if (own > 0) v = -v;
    RayVector ray(v);
    if (!equal(ray.coords(), v)) {
      throw PipelineError("subcone " + std::to_string(index + 1) + ": ray with a negative leading entry");
    }
    out.is_cut.push_back(cuts.contains(ray.coords()));
    out.rays.push_back(std::move(ray));
  }
  const auto cut_count = static_cast<std::size_t>(std::count(out.is_cut.begin(), out.is_cut.end(), true));
  if (cut_count != dim - 1) {
    throw PipelineError("subcone " + std::to_string(index + 1) + ": " + std::to_string(cut_count) +
                        " of the rays are cuts, expected " + std::to_string(dim - 1));
  }
  out.non_cut = static_cast<std::size_t>(std::find(out.is_cut.begin(), out.is_cut.end(), false) - out.is_cut.begin());
  out.seconds = seconds_since(start);
  return out;
}

SubconeResult solve_subcone(std::size_t index, const SubconeOptions& options) {
  return solve_subcone(index, build_hyp7(), options);
}

std::vector<SubconeResult> solve_all_subcones(const HCone& hyp7, int jobs) {
  std::vector<SubconeResult> out(kSubconeCount);
  parallel_for(kSubconeCount, jobs, [&](std::size_t i) { out[i] = solve_subcone(i, hyp7); });
  return out;
}

std::size_t BitMatrix::count(std::size_t r) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::size_t>(std::popcount(row(r)[w]));
  return total;
}

std::size_t BitMatrix::common_count(std::size_t a, std::size_t b) const {
  const std::uint64_t* x = row(a);
  const std::uint64_t* y = row(b);
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::size_t>(std::popcount(x[w] & y[w]));
  return total;
}

std::vector<std::size_t> BitMatrix::common(std::size_t a, std::size_t b) const {
  const std::uint64_t* x = row(a);
  const std::uint64_t* y = row(b);
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = x[w] & y[w]; bits; bits &= bits - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<std::size_t> BitMatrix::ones(std::size_t r) const { return common(r, r); }

CensusReport assemble_census(std::vector<SubconeResult> subcones, int jobs) {
  if (subcones.size() != kSubconeCount) throw std::invalid_argument("assemble_census: need all 26 subcones");
  const auto start = Clock::now();
  OrbitTable facet_orbits = hyp7_facet_orbits();
  HCone hyp7(kPoints, std::vector<Inequality>(facet_orbits.members().begin(), facet_orbits.members().end()));

  std::vector<IntVector> reps;
  for (const RayVector& r : hyp7_cut_representatives()) reps.push_back(r.coords());
  for (const SubconeResult& s : subcones) reps.push_back(s.non_cut_ray().coords());
  std::optional<OrbitTable> ray_orbits;
  try {
    ray_orbits.emplace(kPoints, reps);
  } catch (const std::invalid_argument& e) {
    throw PipelineError(std::string("assemble_census: duplicate ray orbits: ") + e.what());
  }
  for (std::size_t o = 0; o < reps.size(); ++o) {
    if (!is_extreme_ray(hyp7, RayVector(reps[o]))) {
      throw PipelineError("assemble_census: representative of R_" + std::to_string(o + 1) + " is not extreme");
    }
  }

  const std::size_t ray_count = ray_orbits->member_count();
  const std::size_t facet_count = hyp7.size();
  IntMatrix ray_matrix(static_cast<Eigen::Index>(ray_count), hyp7.dim());
  for (std::size_t k = 0; k < ray_count; ++k) {
    ray_matrix.row(static_cast<Eigen::Index>(k)) = ray_orbits->member(k).transpose();
  }

  const Int32Matrix facets32 = hyp7.matrix().cast<std::int32_t>();
  const Int32Matrix rays32 = ray_matrix.cast<std::int32_t>();
  BitMatrix ray_tight(ray_count, facet_count);
  constexpr std::size_t kBlock = 512;
  const std::size_t blocks = (ray_count + kBlock - 1) / kBlock;
  std::mutex error_mutex;
  std::optional<std::string> outside;
  parallel_for(blocks, jobs, [&](std::size_t b) {
    const std::size_t first = b * kBlock;
    const std::size_t rows = std::min(kBlock, ray_count - first);
    const Int32Matrix values =
        rays32.middleRows(static_cast<Eigen::Index>(first), static_cast<Eigen::Index>(rows)) * facets32.transpose();
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t f = 0; f < facet_count; ++f) {
        const std::int32_t v = values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(f));
        if (v == 0) {
          ray_tight.set(first + i, f);
        } else if (v > 0) {
          std::lock_guard lock(error_mutex);
          outside = "ray " + to_string(ray_orbits->member(first + i)) + " violates facet " + std::to_string(f);
        }
      }
    }
  });
  if (outside) throw PipelineError("assemble_census: " + *outside);
  BitMatrix facet_incident(facet_count, ray_count);
  for (std::size_t r = 0; r < ray_count; ++r) {
    for (std::size_t f : ray_tight.ones(r)) facet_incident.set(f, r);
  }

  CensusReport report{std::move(hyp7),      std::move(facet_orbits),   std::move(*ray_orbits),
                      std::move(subcones),  std::move(ray_matrix),     std::move(ray_tight),
                      std::move(facet_incident), {}};
  double subcone_seconds = 0;
  for (const auto& s : report.subcones) subcone_seconds += s.seconds;
  report.seconds["subcones"] = subcone_seconds;
  report.seconds["census"] = seconds_since(start);
  return report;
}

IncidenceTable incidence_table(const CensusReport& report) {
  const auto& rays = report.ray_orbits;
  const auto& facets = report.facet_orbits;
  IncidenceTable t;
  t.counts.assign(rays.orbit_count(), std::vector<std::int64_t>(facets.orbit_count(), 0));
  t.rays_per_facet = t.counts;
  for (std::size_t i = 0; i < rays.orbit_count(); ++i) {
    for (std::size_t f : report.ray_tight.ones(representative_member(rays, i))) ++t.counts[i][facets.orbit_of(f)];
    t.row_sums.push_back(std::accumulate(t.counts[i].begin(), t.counts[i].end(), std::int64_t{0}));
  }
  for (std::size_t j = 0; j < facets.orbit_count(); ++j) {
    for (std::size_t r : report.facet_incident.ones(representative_member(facets, j))) {
      ++t.rays_per_facet[rays.orbit_of(r)][j];
    }
  }
  t.double_counting_ok = true;
  for (std::size_t i = 0; i < rays.orbit_count(); ++i) {
    for (std::size_t j = 0; j < facets.orbit_count(); ++j) {
      const auto lhs = static_cast<std::int64_t>(rays.orbit_size(i)) * t.counts[i][j];
      const auto rhs = static_cast<std::int64_t>(facets.orbit_size(j)) * t.rays_per_facet[i][j];
      if (lhs != rhs) t.double_counting_ok = false;
    }
  }
  return t;
}

namespace {

// Neighbors of each representative in the graph where two vertices are
// adjacent iff their common zero set has rank dim - 2 in `vectors`.
AdjacencyTable face_adjacency(const OrbitTable& orbits, const BitMatrix& zeros, const IntMatrix& vectors,
                              std::size_t target, int jobs) {
  const std::size_t orbit_count = orbits.orbit_count();
  AdjacencyTable t;
  t.counts.assign(orbit_count, std::vector<std::int64_t>(orbit_count, 0));
  t.representative_neighbors.resize(orbit_count);
  std::vector<std::size_t> tests(orbit_count, 0);
  parallel_for(orbit_count, jobs, [&](std::size_t i) {
    const std::size_t rep = representative_member(orbits, i);
    for (std::size_t s = 0; s < orbits.member_count(); ++s) {
      if (s == rep || zeros.common_count(rep, s) < target) continue;
      const auto common = zeros.common(rep, s);
      ++tests[i];
      if (integer_rank(vectors, common, target) == target) {
        t.representative_neighbors[i].push_back(s);
        ++t.counts[i][orbits.orbit_of(s)];
      }
    }
  });
  for (std::size_t i = 0; i < orbit_count; ++i) {
    t.totals.push_back(std::accumulate(t.counts[i].begin(), t.counts[i].end(), std::int64_t{0}));
    t.rank_tests += tests[i];
  }
  t.double_counting_ok = true;
  for (std::size_t i = 0; i < orbit_count; ++i) {
    for (std::size_t j = 0; j < orbit_count; ++j) {
      if (static_cast<std::int64_t>(orbits.orbit_size(i)) * t.counts[i][j] !=
          static_cast<std::int64_t>(orbits.orbit_size(j)) * t.counts[j][i]) {
        t.double_counting_ok = false;
      }
    }
  }
  return t;
}

}  // namespace

AdjacencyTable ray_adjacency_table(const CensusReport& report, int jobs) {
  return face_adjacency(report.ray_orbits, report.ray_tight, report.hyp7.matrix(),
                        static_cast<std::size_t>(report.hyp7.dim() - 2), jobs);
}

AdjacencyTable facet_adjacency_table(const CensusReport& report, int jobs) {
  return face_adjacency(report.facet_orbits, report.facet_incident, report.ray_matrix,
                        static_cast<std::size_t>(report.hyp7.dim() - 2), jobs);
}

std::vector<std::vector<std::uint32_t>> expand_neighbors(const OrbitTable& orbits, const AdjacencyTable& table) {
  const auto& group = symmetric_group(orbits.points());
  std::vector<std::vector<std::uint32_t>> out(orbits.member_count());
  IntVector image(pair_count(orbits.points()));
  for (std::size_t m = 0; m < orbits.member_count(); ++m) {
    const std::size_t k = orbits.transporter(m);
    auto& list = out[m];
    for (std::size_t nb : table.representative_neighbors[orbits.orbit_of(m)]) {
      group.apply(k, orbits.member(nb), image);
      list.push_back(static_cast<std::uint32_t>(*orbits.find(image)));
    }
    std::sort(list.begin(), list.end());
  }
  return out;
}

DiameterReport diameters(const CensusReport& report, const AdjacencyTable& rays, const AdjacencyTable& facets) {
  DiameterReport d;
  const auto& ray_orbits = report.ray_orbits;
  const auto skeleton = expand_neighbors(ray_orbits, rays);
  std::vector<std::size_t> sources;
  for (std::size_t o = 0; o < ray_orbits.orbit_count(); ++o) sources.push_back(representative_member(ray_orbits, o));
  d.skeleton = bfs_diameter(skeleton.size(), [&](std::size_t v) -> const auto& { return skeleton[v]; }, sources);

  const std::size_t cut_count = ray_orbits.orbit_begin(kCutOrbitCount);
  std::vector<std::vector<std::uint32_t>> cut_graph(cut_count);
  for (std::size_t v = 0; v < cut_count; ++v) {
    for (auto w : skeleton[v]) {
      if (w < cut_count) cut_graph[v].push_back(w);
    }
  }
  d.cuts_only = bfs_diameter(cut_count, [&](std::size_t v) -> const auto& { return cut_graph[v]; },
                             std::span<const std::size_t>(sources.data(), kCutOrbitCount));

  const auto is_non_cut = [&](std::size_t v) { return v >= cut_count; };
  const auto& a = skeleton[d.skeleton.from];
  const auto& b = skeleton[d.skeleton.to];
  std::vector<std::uint32_t> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  d.skeleton_witness_ok = is_non_cut(d.skeleton.from) && is_non_cut(d.skeleton.to) && shared.empty() &&
                          std::all_of(a.begin(), a.end(), [&](auto v) { return !is_non_cut(v); }) &&
                          std::all_of(b.begin(), b.end(), [&](auto v) { return !is_non_cut(v); });

  d.local_graphs_complete = true;
  for (std::size_t o = kCutOrbitCount; o < ray_orbits.orbit_count(); ++o) {
    const auto& nbrs = skeleton[sources[o]];
    if (nbrs.size() != static_cast<std::size_t>(report.hyp7.dim() - 1)) d.local_graphs_complete = false;
    for (std::size_t x = 0; x < nbrs.size(); ++x) {
      if (is_non_cut(nbrs[x])) d.local_graphs_complete = false;
      for (std::size_t y = x + 1; y < nbrs.size(); ++y) {
        const auto& list = skeleton[nbrs[x]];
        if (!std::binary_search(list.begin(), list.end(), nbrs[y])) d.local_graphs_complete = false;
      }
    }
  }

  const auto& facet_orbits = report.facet_orbits;
  const auto ridge = expand_neighbors(facet_orbits, facets);
  std::vector<std::size_t> facet_sources;
  for (std::size_t o = 0; o < facet_orbits.orbit_count(); ++o) {
    facet_sources.push_back(representative_member(facet_orbits, o));
  }
  d.ridge = bfs_diameter(ridge.size(), [&](std::size_t v) -> const auto& { return ridge[v]; }, facet_sources);
  return d;
}

Correspondence correspondence_check(const CensusReport& report) {
  Correspondence c;
  const auto& rays = report.ray_orbits;
  const auto facets = cut7_nonhypermetric_representatives();
  const auto reference = hyp7_ray_representatives();
  const std::size_t first_non_cut = rays.orbit_begin(kCutOrbitCount);
  c.bijection_matches_table = true;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    std::vector<bool> hit(rays.orbit_count(), false);
    for (std::size_t r = first_non_cut; r < rays.member_count(); ++r) {
      if (dot(facets[i].coeffs(), rays.member(r)) < 0) hit[rays.orbit_of(r)] = true;
    }
    std::vector<std::size_t> orbits;
    for (std::size_t o = 0; o < hit.size(); ++o) {
      if (hit[o]) orbits.push_back(o);
    }
    const bool same_orbit = rays.classify(reference[i].coords()) == kCutOrbitCount + i;
    c.matches_reference_ray.push_back(same_orbit);
    if (orbits != std::vector<std::size_t>{kCutOrbitCount + i} || !same_orbit) c.bijection_matches_table = false;
    c.violating_orbits.push_back(std::move(orbits));
  }
  return c;
}

SwitchingClasses switching_classes() {
  const auto facets = cut7_nonhypermetric_representatives();
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> by_canonical;
  for (std::size_t i = 0; i < facets.size(); ++i) by_canonical.emplace(canonical_form(facets[i].coeffs(), kPoints), i);

  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  const VCone cuts = generate_cuts(kPoints);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::uint32_t mask = 1; mask < (1U << (kPoints - 1)); ++mask) {
      const CutSet s = CutSet::from_mask(kPoints, mask);
      if (evaluate(facets[i], cut_vector(s)) != 0) continue;
      const auto it = by_canonical.find(canonical_form(switching(facets[i], s).coeffs(), kPoints));
      if (it == by_canonical.end()) {
        throw PipelineError("switching O_" + std::to_string(i + 1) + " by " + s.label() +
                            " leaves the 26 non-hypermetric orbits");
      }
      parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < facets.size(); ++i) grouped[find(i)].push_back(i);
  SwitchingClasses out;
  for (auto& [root, members] : grouped) out.classes.push_back(std::move(members));
  std::sort(out.classes.begin(), out.classes.end());

  out.labels_ok = true;
  std::size_t base = 0;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const auto label = cut7_switch_label(k);
    if (!label) {
      base = k;
      continue;
    }
    try {
      if (!(switching(facets[base], *label) == facets[k])) out.labels_ok = false;
    } catch (const NotIncidentError&) {
      out.labels_ok = false;
    }
  }
  return out;
}

CompletenessReport verify_facet_completeness(const CensusReport& report, int max_abs) {
  CompletenessReport out;
  const std::size_t target = static_cast<std::size_t>(report.hyp7.dim() - 1);
  for_each_bvector(kPoints, max_abs, [&](const BVector& b) {
    ++out.candidates;
    const IntVector h = hypermetric_inequality(b).coeffs();
    const IntVector values = report.ray_matrix * h;
    if (values.maxCoeff() > 0) return;
    ++out.valid;
    std::vector<std::size_t> incident;
    for (Eigen::Index r = 0; r < values.size(); ++r) {
      if (values(r) == 0) incident.push_back(static_cast<std::size_t>(r));
    }
    if (integer_rank(report.ray_matrix, incident, target) == target) {
      out.facets.push_back(b);
      const auto orbit = report.facet_orbits.classify(h);
      out.matched_orbits.push_back(orbit ? static_cast<int>(*orbit) : -1);
    } else {
      out.valid_non_facets.push_back(b);
    }
  });
  std::vector<int> sorted = out.matched_orbits;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(report.facet_orbits.orbit_count());
  std::iota(expected.begin(), expected.end(), 0);
  out.complete = sorted == expected;
  return out;
}

std::vector<FaceWitness> simplex_face_decomposition() {
  const VCone cuts = generate_cuts(kPoints);
  const auto cut_mask = [&](const IntVector& f) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      if (dot(f, cuts[c].coords()) == 0) mask |= std::uint64_t{1} << c;
    }
    return mask;
  };
  const auto b = hyp7_facet_representatives();
  const auto triangles = orbit(hypermetric_inequality(b[0]).coeffs(), kPoints);
  std::vector<std::uint64_t> triangle_masks;
  for (const auto& t : triangles) triangle_masks.push_back(cut_mask(t));

  const auto cut7 = cut7_nonhypermetric_representatives();
  std::vector<std::vector<IntVector>> members;
  std::vector<std::vector<std::uint64_t>> member_masks;
  for (const auto& f : cut7) {
    members.push_back(orbit(f.coeffs(), kPoints));
    member_masks.emplace_back();
    for (const auto& g : members.back()) member_masks.back().push_back(cut_mask(g));
  }

  // F_11..F_14 against O_23, O_24, O_22, O_25.
  const std::array<std::size_t, 4> expected = {22, 23, 21, 24};
  std::vector<FaceWitness> out;
  for (std::size_t k = 0; k < expected.size(); ++k) {
    FaceWitness w;
    w.facet_orbit = 10 + k;
    w.expected_cut7_orbit = expected[k];
    const std::uint64_t face = cut_mask(hypermetric_inequality(b[w.facet_orbit]).coeffs());
    w.incident_cuts = static_cast<std::size_t>(std::popcount(face));
    for (std::size_t o = 0; o < cut7.size(); ++o) {
      bool found = false;
      for (std::size_t t = 0; t < triangles.size() && !found; ++t) {
        for (std::size_t g = 0; g < members[o].size(); ++g) {
          if ((triangle_masks[t] & member_masks[o][g]) != face) continue;
          found = true;
          if (o == w.expected_cut7_orbit) {
            w.triangle = triangles[t];
            w.cut7_facet = members[o][g];
          }
          break;
        }
      }
      if (found) w.matching_cut7_orbits.push_back(o);
    }
    w.ok = std::find(w.matching_cut7_orbits.begin(), w.matching_cut7_orbits.end(), w.expected_cut7_orbit) !=
           w.matching_cut7_orbits.end();
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::string> diff_against_reference(const CensusReport& report, const IncidenceTable& incidence,
                                                const AdjacencyTable& rays, const AdjacencyTable& facets) {
  std::vector<std::string> out;
  const auto mismatch = [&](const std::string& what, std::int64_t computed, std::int64_t reference) {
    if (computed != reference) {
      out.push_back(what + ": computed " + std::to_string(computed) + ", reference " + std::to_string(reference));
    }
  };
  const auto R = [](std::size_t i) { return "R_" + std::to_string(i + 1); };
  const auto F = [](std::size_t j) { return "F_" + std::to_string(j + 1); };

  mismatch("facet count", static_cast<std::int64_t>(report.hyp7.size()), 3773);
  mismatch("ray count", static_cast<std::int64_t>(report.ray_count()), 37170);
  mismatch("facet orbit count", static_cast<std::int64_t>(report.facet_orbits.orbit_count()), 14);
  mismatch("ray orbit count", static_cast<std::int64_t>(report.ray_orbits.orbit_count()), 29);
  if (report.facet_orbits.orbit_count() != 14 || report.ray_orbits.orbit_count() != 29) return out;

  for (std::size_t j = 0; j < 14; ++j) {
    mismatch("|" + F(j) + "|", static_cast<std::int64_t>(report.facet_orbits.orbit_size(j)),
             tables::kFacetOrbitSizes[j]);
  }
  const auto reference_rays = hyp7_ray_representatives();
  for (std::size_t i = 0; i < 29; ++i) {
    mismatch("|" + R(i) + "|", static_cast<std::int64_t>(report.ray_orbits.orbit_size(i)), tables::kRayOrbitSizes[i]);
    if (i >= kCutOrbitCount &&
        report.ray_orbits.classify(reference_rays[i - kCutOrbitCount].coords()) != std::optional<std::size_t>(i)) {
      out.push_back(R(i) + ": computed ray is not in the orbit of the reference generator");
    }
    for (std::size_t j = 0; j < 14; ++j) {
      mismatch("incidence " + R(i) + " " + F(j), incidence.counts[i][j], tables::kIncidence[i][j]);
    }
    for (std::size_t j = 0; j < kCutOrbitCount; ++j) {
      mismatch("ray adjacency " + R(i) + " " + R(j), rays.counts[i][j], tables::kRayCutAdjacency[i][j]);
    }
    mismatch("ray adjacency total " + R(i), rays.totals[i], tables::kRayAdjacencyTotals[i]);
    if (i >= kCutOrbitCount) {
      for (std::size_t j = kCutOrbitCount; j < 29; ++j) mismatch("ray adjacency " + R(i) + " " + R(j), rays.counts[i][j], 0);
    }
  }
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = 0; j < 14; ++j) {
      mismatch("facet adjacency " + F(i) + " " + F(j), facets.counts[i][j], tables::kFacetAdjacency[i][j]);
    }
    mismatch("facet adjacency total " + F(i), facets.totals[i], tables::kFacetAdjacencyTotals[i]);
  }
  return out;
}

Hyp7Analysis analyze_hyp7(const AnalysisOptions& options) {
  const auto timed = [](double& slot, auto&& fn) {
    const auto start = Clock::now();
    auto value = fn();
    slot = seconds_since(start);
    return value;
  };
  std::map<std::string, double> seconds;
  const HCone hyp7 = timed(seconds["generate"], [] { return build_hyp7(); });
  auto subcones = timed(seconds["subcones"], [&] { return solve_all_subcones(hyp7, options.jobs); });
  CensusReport census = timed(seconds["census"], [&] { return assemble_census(std::move(subcones), options.jobs); });
  IncidenceTable incidence = timed(seconds["incidence"], [&] { return incidence_table(census); });
  AdjacencyTable rays = timed(seconds["ray_adjacency"], [&] { return ray_adjacency_table(census, options.jobs); });
  AdjacencyTable facets = timed(seconds["facet_adjacency"], [&] { return facet_adjacency_table(census, options.jobs); });
  DiameterReport diam = timed(seconds["diameters"], [&] { return diameters(census, rays, facets); });
  Correspondence corr = timed(seconds["correspondence"], [&] { return correspondence_check(census); });
  SwitchingClasses sw = timed(seconds["switching"], [] { return switching_classes(); });
  std::optional<CompletenessReport> comp;
  if (options.completeness) {
    comp = timed(seconds["completeness"],
                 [&] { return verify_facet_completeness(census, options.completeness_max_abs); });
  }
  auto faces = timed(seconds["faces"], [] { return simplex_face_decomposition(); });
  return Hyp7Analysis{std::move(census), std::move(incidence), std::move(rays), std::move(facets),
                      std::move(diam),   std::move(corr),      std::move(sw),   std::move(comp),
                      std::move(faces),  std::move(seconds)};
}

std::vector<std::string> claim_mismatches(const Hyp7Analysis& a) {
  std::vector<std::string> out =
      diff_against_reference(a.census, a.incidence, a.ray_adjacency, a.facet_adjacency);
  const auto require = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };
  const std::size_t dim = static_cast<std::size_t>(a.census.hyp7.dim());
  for (const SubconeResult& s : a.census.subcones) {
    const auto cuts = static_cast<std::size_t>(std::count(s.is_cut.begin(), s.is_cut.end(), true));
    require(s.kept.size() == dim && s.rays.size() == dim && cuts == dim - 1,
            "subcone C_" + std::to_string(s.index + 1) + ": " + std::to_string(s.kept.size()) + " facets, " +
                std::to_string(s.rays.size()) + " rays, " + std::to_string(cuts) + " cuts");
  }
  require(a.incidence.double_counting_ok, "incidence double counting fails");
  require(a.ray_adjacency.double_counting_ok, "ray adjacency double counting fails");
  require(a.facet_adjacency.double_counting_ok, "facet adjacency double counting fails");
  require(a.diameters.skeleton.diameter == 3,
          "skeleton diameter " + std::to_string(a.diameters.skeleton.diameter) + ", expected 3");
  require(a.diameters.ridge.diameter == 3,
          "ridge diameter " + std::to_string(a.diameters.ridge.diameter) + ", expected 3");
  require(a.diameters.skeleton_witness_ok, "skeleton witness pair does not have disjoint cut neighborhoods");
  require(a.diameters.local_graphs_complete, "a non-cut ray has a non-complete local graph");
  require(a.correspondence.bijection_matches_table, "violation map is not the tabulated bijection");
  std::vector<std::size_t> sizes;
  for (const auto& c : a.switching.classes) sizes.push_back(c.size());
  require(sizes == std::vector<std::size_t>{3, 4, 7, 7, 5}, "switching class sizes differ from (3,4,7,7,5)");
  require(a.switching.labels_ok, "a tabulated switching label does not reproduce its row");
  if (a.completeness) require(a.completeness->complete, "completeness sweep does not recover exactly b^1..b^14");
  for (const FaceWitness& w : a.faces) {
    require(w.ok && w.matching_cut7_orbits.size() == 1,
            "F_" + std::to_string(w.facet_orbit + 1) + " is not a face of a triangle and O_" +
                std::to_string(w.expected_cut7_orbit + 1) + " alone");
  }
  return out;
}

}  // namespace hypercone
