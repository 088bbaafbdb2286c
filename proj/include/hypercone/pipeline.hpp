#pragma once

// The HYP_7 computation: subcones cut out by the non-hypermetric CUT_7
// facets, the extreme-ray census, and the incidence / adjacency analysis.
//
// Orbit numbering follows the reference tables: facet orbits F_1..F_14 are
// generated by b^1..b^14; ray orbits R_1..R_3 are the cuts with |S| = 1, 2,
// 3 and R_{i+4} (0-based i) is the non-cut ray of subcone C_i.

#include "hypercone/cone.hpp"
#include "hypercone/hypermetric.hpp"
#include "hypercone/symmetry.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypercone {

inline constexpr int kPoints = 7;
inline constexpr std::size_t kSubconeCount = 26;
inline constexpr std::size_t kCutOrbitCount = 3;

/// Internal consistency failure: the computation contradicts a structural
/// guarantee (wrong survivor count, non-simplex subcone, duplicate orbit...).
class PipelineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The 14 facet orbits of HYP_7, representatives b^1..b^14.
OrbitTable hyp7_facet_orbits();

/// The 3773 facets, orbit-major and lexicographic within each orbit.
HCone build_hyp7();

struct SubconeOptions {
  bool prune = true;  // share verdicts across the stabilizer of the CUT_7 facet
  RedundancyMethod method = RedundancyMethod::kIncremental;
};

struct SubconeResult {
  std::size_t index = 0;                     // 0-based: subcone of O_{index+1}
  std::vector<std::size_t> kept;             // surviving rows; 3773 is the CUT_7 facet
  std::vector<Inequality> facets;            // the surviving inequalities
  std::vector<RayVector> rays;               // ray opposite each surviving facet
  std::vector<bool> is_cut;
  std::size_t non_cut = 0;                   // position of the non-cut ray in `rays`
  std::size_t lp_probes = 0;
  std::size_t stabilizer_order = 0;
  double seconds = 0;

  const RayVector& non_cut_ray() const { return rays[non_cut]; }
};

SubconeResult solve_subcone(std::size_t index, const HCone& hyp7, const SubconeOptions& options = {});
SubconeResult solve_subcone(std::size_t index, const SubconeOptions& options = {});

/// Solves all 26 subcones on `jobs` threads; results are in index order.
std::vector<SubconeResult> solve_all_subcones(const HCone& hyp7, int jobs = 1);

/// Row-major bit matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words() const { return words_; }
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  bool test(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }
  const std::uint64_t* row(std::size_t r) const { return &bits_[r * words_]; }
  std::size_t count(std::size_t r) const;
  std::size_t common_count(std::size_t a, std::size_t b) const;
  /// Column indices set in both rows a and b.
  std::vector<std::size_t> common(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> ones(std::size_t r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct CensusReport {
  HCone hyp7;                         // rows in facet_orbits member order
  OrbitTable facet_orbits;            // F_1..F_14
  OrbitTable ray_orbits;              // R_1..R_29
  std::vector<SubconeResult> subcones;
  IntMatrix ray_matrix;               // one row per ray, in ray_orbits member order
  BitMatrix ray_tight;                // ray x facet: <f, r> = 0
  BitMatrix facet_incident;           // facet x ray (transpose of ray_tight)
  std::map<std::string, double> seconds;

  std::size_t ray_count() const { return ray_orbits.member_count(); }
  bool is_cut_orbit(std::size_t orbit) const { return orbit < kCutOrbitCount; }
};

/// Builds both orbit tables, checks membership and extremality of every
/// representative, and records the tight-set bit matrices.
CensusReport assemble_census(std::vector<SubconeResult> subcones, int jobs = 1);

using CountMatrix = std::vector<std::vector<std::int64_t>>;

struct IncidenceTable {
  CountMatrix counts;             // 29 x 14: facets of F_j tight on the representative of R_i
  std::vector<std::int64_t> row_sums;
  CountMatrix rays_per_facet;     // 29 x 14: rays of R_i incident to the representative of F_j
  bool double_counting_ok = false;
};
IncidenceTable incidence_table(const CensusReport& report);

struct AdjacencyTable {
  CountMatrix counts;  // orbits x orbits: members of orbit j adjacent to the representative of i
  std::vector<std::int64_t> totals;
  std::vector<std::vector<std::size_t>> representative_neighbors;  // member indices
  bool double_counting_ok = false;
  std::size_t rank_tests = 0;
};

/// Skeleton rows for all 29 representatives.
AdjacencyTable ray_adjacency_table(const CensusReport& report, int jobs = 1);
/// Ridge-graph rows for all 14 representatives.
AdjacencyTable facet_adjacency_table(const CensusReport& report, int jobs = 1);

/// Every neighbor list of the graph, transported from the representatives.
std::vector<std::vector<std::uint32_t>> expand_neighbors(const OrbitTable& orbits,
                                                         const AdjacencyTable& table);

struct DiameterReport {
  DiameterResult skeleton;
  DiameterResult ridge;
  DiameterResult cuts_only;          // skeleton restricted to the 63 cuts
  bool skeleton_witness_ok = false;  // endpoints are non-cut rays with disjoint cut neighborhoods
  bool local_graphs_complete = false;  // the 20 cut neighbors of every non-cut ray are pairwise adjacent
};
DiameterReport diameters(const CensusReport& report, const AdjacencyTable& rays,
                         const AdjacencyTable& facets);

struct Correspondence {
  std::vector<std::vector<std::size_t>> violating_orbits;  // per O_i: ray orbits with a violating member
  std::vector<bool> matches_reference_ray;  // subcone ray lies in the orbit of the tabulated R_{i+4}
  bool bijection_matches_table = false;
};
/// A ray violates O_i when <O_i, r> < 0.
Correspondence correspondence_check(const CensusReport& report);

struct SwitchingClasses {
  std::vector<std::vector<std::size_t>> classes;  // 0-based O indices, ascending
  bool labels_ok = false;                          // each labelled row is its base switched by the label
};
SwitchingClasses switching_classes();

struct CompletenessReport {
  std::size_t candidates = 0;
  std::size_t valid = 0;
  std::vector<BVector> facets;            // sorted-descending b found to define facets
  std::vector<BVector> valid_non_facets;
  std::vector<int> matched_orbits;        // facet orbit (0-based) of each entry of `facets`
  bool complete = false;                  // exactly b^1..b^14
};
CompletenessReport verify_facet_completeness(const CensusReport& report, int max_abs = 3);

struct FaceWitness {
  std::size_t facet_orbit = 0;             // 10..13 for F_11..F_14
  std::size_t expected_cut7_orbit = 0;     // 0-based O index
  std::vector<std::size_t> matching_cut7_orbits;
  IntVector triangle;                      // witness for the expected orbit
  IntVector cut7_facet;
  std::size_t incident_cuts = 0;
  bool ok = false;
};
std::vector<FaceWitness> simplex_face_decomposition();

/// Mismatches between computed and reference tables, one line each.
std::vector<std::string> diff_against_reference(const CensusReport& report,
                                                const IncidenceTable& incidence,
                                                const AdjacencyTable& rays,
                                                const AdjacencyTable& facets);

struct AnalysisOptions {
  int jobs = 1;
  bool completeness = true;  // the b-vector sweep
  int completeness_max_abs = 3;
};

/// Everything computed about HYP_7, end to end.
struct Hyp7Analysis {
  CensusReport census;
  IncidenceTable incidence;
  AdjacencyTable ray_adjacency;
  AdjacencyTable facet_adjacency;
  DiameterReport diameters;
  Correspondence correspondence;
  SwitchingClasses switching;
  std::optional<CompletenessReport> completeness;
  std::vector<FaceWitness> faces;
  std::map<std::string, double> seconds;
};

Hyp7Analysis analyze_hyp7(const AnalysisOptions& options = {});

/// diff_against_reference plus every structural claim (subcone shape,
/// double counting, diameters, correspondence, switching classes,
/// completeness, face pairings). Empty iff all claims hold.
std::vector<std::string> claim_mismatches(const Hyp7Analysis& a);

/// Runs `task(i)` for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

}  // namespace hypercone
