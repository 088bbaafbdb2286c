#pragma once

// Pointed polyhedral cones in pair-indexed coordinates and their face
// machinery. An H-cone is {d : <f, d> <= 0 for every inequality f}; a V-cone
// is the conic hull of its rays. Every face test reduces to an exact rank.

#include "hypercone/scalar.hpp"
#include "hypercone/symmetry.hpp"

#include <deque>
#include <optional>
#include <vector>

namespace hypercone {

/// Integer inequality <coeffs, d> <= 0, stored with content 1.
class Inequality {
 public:
  /// Divides out the content; throws std::invalid_argument for the zero vector.
  explicit Inequality(IntVector coeffs);

  const IntVector& coeffs() const { return coeffs_; }
  Eigen::Index size() const { return coeffs_.size(); }
  Inequality negated() const { return Inequality(IntVector(-coeffs_)); }

  friend bool operator==(const Inequality& a, const Inequality& b) { return equal(a.coeffs_, b.coeffs_); }

 private:
  IntVector coeffs_;
};

/// Primitive integer generator of a ray: gcd 1, first nonzero entry positive.
class RayVector {
 public:
  explicit RayVector(IntVector coords);

  const IntVector& coords() const { return coords_; }
  Eigen::Index size() const { return coords_.size(); }

  friend bool operator==(const RayVector& a, const RayVector& b) { return equal(a.coords_, b.coords_); }

 private:
  IntVector coords_;
};

class HCone {
 public:
  /// Throws DimensionError on a length mismatch and std::invalid_argument on duplicates.
  HCone(int n, std::vector<Inequality> inequalities);

  int points() const { return n_; }
  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return inequalities_.size(); }
  const std::vector<Inequality>& inequalities() const& { return inequalities_; }
  std::vector<Inequality> inequalities() && { return std::move(inequalities_); }
  const Inequality& operator[](std::size_t k) const { return inequalities_[k]; }
  /// Coefficient rows, one per inequality.
  const IntMatrix& matrix() const { return matrix_; }

 private:
  int n_;
  Eigen::Index dim_;
  std::vector<Inequality> inequalities_;
  IntMatrix matrix_;
};

class VCone {
 public:
  /// Throws DimensionError on a length mismatch and std::invalid_argument on repeated rays.
  VCone(int n, std::vector<RayVector> rays);

  int points() const { return n_; }
  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return rays_.size(); }
  const std::vector<RayVector>& rays() const& { return rays_; }
  std::vector<RayVector> rays() && { return std::move(rays_); }
  const RayVector& operator[](std::size_t k) const { return rays_[k]; }
  const IntMatrix& matrix() const { return matrix_; }

 private:
  int n_;
  Eigen::Index dim_;
  std::vector<RayVector> rays_;
  IntMatrix matrix_;
};

/// A point violating a cone inequality.
class NotInConeError : public std::domain_error {
 public:
  NotInConeError(std::size_t inequality, std::int64_t value);
  std::size_t inequality() const { return inequality_; }
  std::int64_t value() const { return value_; }

 private:
  std::size_t inequality_;
  std::int64_t value_;
};

/// An inequality violated by a ray of a V-cone.
class InvalidInequalityError : public std::domain_error {
 public:
  InvalidInequalityError(std::size_t ray, std::int64_t value);
  std::size_t ray() const { return ray_; }
  std::int64_t value() const { return value_; }

 private:
  std::size_t ray_;
  std::int64_t value_;
};

/// <f, r>. Positive means r violates f; zero means r lies on f's hyperplane.
std::int64_t evaluate(const Inequality& f, const RayVector& r);
std::int64_t evaluate(const Inequality& f, const IntVector& x);

/// Indices of the inequalities of `c` that vanish on `r`. Throws NotInConeError.
std::vector<std::size_t> tight_set(const HCone& c, const RayVector& r);

/// Rank of the tight set equals dim - 1.
bool is_extreme_ray(const HCone& c, const RayVector& r);

/// Rank of the incident rays equals dim - 1. Throws InvalidInequalityError.
bool is_facet(const VCone& c, const Inequality& f);

/// Two distinct extreme rays whose common tight set has rank dim - 2.
/// Throws std::invalid_argument if either ray is not extreme.
bool rays_adjacent(const HCone& c, const RayVector& r1, const RayVector& r2);

/// Two distinct facets whose common incident rays have rank dim - 2.
/// Throws std::invalid_argument if either inequality is not a facet.
bool facets_adjacent(const VCone& c, const Inequality& f1, const Inequality& f2);

/// LP probe: maximize <f, x> subject to <g, x> <= 0 for the listed
/// inequalities and sum(x) = 1.
struct ProbeOutcome {
  bool redundant = false;
  std::optional<RationalVector> violating_point;  // a slice point with <f, x> > 0
  std::size_t pivots = 0;
};
ProbeOutcome redundancy_probe(const IntVector& f, const IntMatrix& constraints,
                              std::span<const std::size_t> rows);

/// f = c[index] is implied by the other inequalities (one full LP probe).
bool is_redundant(const HCone& c, std::size_t index);
/// Same for a raw list, which may contain repeats.
bool is_redundant(int n, std::span<const Inequality> list, std::size_t index);

enum class RedundancyMethod {
  /// Probe each candidate against the known-essential set; ray shooting from
  /// an interior point discovers essential inequalities (Clarkson).
  kIncremental,
  /// Probe each candidate against all other inequalities.
  kExhaustive,
};

struct RedundancyOptions {
  /// Permutations preserving the inequality set; one probe per orbit.
  const PermutationGroup* group = nullptr;
  RedundancyMethod method = RedundancyMethod::kIncremental;
  /// Strictly interior point. Computed by LP when absent.
  std::optional<IntVector> interior;
};

struct RedundancyResult {
  HCone cone;
  std::vector<std::size_t> kept;  // indices into the input list, ascending
  std::size_t lp_probes = 0;
  std::size_t duplicates = 0;
};

/// Minimal sub-list of `c` defining the same cone.
///
/// The cone must be full-dimensional and sum(x) must be positive on its
/// nonzero points (true for every metric cone). Duplicate inequalities are
/// dropped first; each remaining inequality is kept iff it is not implied by
/// the others. With a group, verdicts are shared across each orbit.
RedundancyResult remove_redundancy(const HCone& c, const RedundancyOptions& options = {});
RedundancyResult remove_redundancy(int n, std::span<const Inequality> list,
                                   const RedundancyOptions& options = {});

/// Strictly interior integer point of a full-dimensional cone, by LP.
std::optional<IntVector> interior_point(const HCone& c);

class SizeGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr Eigen::Index kDoubleDescriptionMaxDim = 15;
inline constexpr std::size_t kDoubleDescriptionMaxInequalities = 256;

/// All extreme rays of a pointed full-dimensional H-cone, sorted
/// lexicographically. Inequalities are inserted in input order.
VCone double_description(const HCone& c);

class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError(std::size_t source, std::size_t reached, std::size_t total);
  std::size_t source() const { return source_; }

 private:
  std::size_t source_;
};

struct DiameterResult {
  std::size_t diameter = 0;
  std::size_t from = 0;  // witness pair at distance `diameter`
  std::size_t to = 0;
};

/// Largest BFS eccentricity over `sources`.
///
/// `neighbors(v)` returns any range of vertex indices. The result equals the
/// graph diameter when the sources meet every orbit of a vertex-transitive-
/// per-orbit automorphism group. Throws DisconnectedGraphError.
template <typename NeighborOracle>
DiameterResult bfs_diameter(std::size_t vertex_count, NeighborOracle&& neighbors,
                            std::span<const std::size_t> sources) {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  DiameterResult best;
  if (!sources.empty()) best.from = best.to = sources.front();
  std::vector<std::size_t> distance(vertex_count);
  for (std::size_t source : sources) {
    std::fill(distance.begin(), distance.end(), kUnseen);
    std::deque<std::size_t> queue{source};
    distance[source] = 0;
    std::size_t reached = 1;
    std::size_t last = source;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      last = v;
      for (std::size_t w : neighbors(v)) {
        if (distance[w] != kUnseen) continue;
        distance[w] = distance[v] + 1;
        ++reached;
        queue.push_back(w);
      }
    }
    if (reached != vertex_count) throw DisconnectedGraphError(source, reached, vertex_count);
    if (distance[last] > best.diameter) best = {distance[last], source, last};
  }
  return best;
}

}  // namespace hypercone
