#pragma once

// Inequality and ray families on n points: hypermetric inequalities, cuts,
// triangle systems, path metrics, and the built-in HYP_7 / CUT_7 data.

#include "hypercone/cone.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hypercone {

/// Integer point weights b with sum 1 and at least two nonzero entries.
class BVector {
 public:
  explicit BVector(IntVector b);
  BVector(std::initializer_list<std::int64_t> b) : BVector(make_int_vector(b)) {}

  int size() const { return static_cast<int>(b_.size()); }
  const IntVector& values() const { return b_; }
  std::int64_t operator[](int i) const { return b_(i); }
  std::int64_t max_abs() const { return b_.cwiseAbs().maxCoeff(); }

  friend bool operator==(const BVector& a, const BVector& b) { return equal(a.b_, b.b_); }

 private:
  IntVector b_;
};

/// A bipartition {S, complement} of n points, stored as the side without
/// the last point.
class CutSet {
 public:
  /// `points` are 0-based. Throws for the empty or the full set.
  CutSet(int n, const std::vector<int>& points);
  static CutSet from_mask(int n, std::uint32_t mask);

  int points_total() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  bool separates(int i, int j) const { return contains(i) != contains(j); }
  std::vector<int> members() const;
  /// 1-based, e.g. "{1,3}".
  std::string label() const;

  friend bool operator==(const CutSet& a, const CutSet& b) { return a.n_ == b.n_ && a.mask_ == b.mask_; }

 private:
  CutSet(int n, std::uint32_t mask, bool);
  int n_;
  std::uint32_t mask_;
};

class SimpleGraph {
 public:
  /// Edges are 0-based. Throws on loops, repeated edges or bad endpoints.
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);
  static SimpleGraph complete(int n);

  int vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;
  /// Copy with the given edges deleted; throws if one is absent.
  SimpleGraph without(const std::vector<std::pair<int, int>>& removed) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

/// coeffs[(i,j)] = b_i b_j, content-normalized.
Inequality hypermetric_inequality(const BVector& b);

/// Sum of b over S.
std::int64_t weight(const BVector& b, const CutSet& s);

RayVector cut_vector(const CutSet& s);

inline constexpr int kMinCutPoints = 3;
inline constexpr int kMaxCutPoints = 8;

/// All 2^(n-1) - 1 cuts for 3 <= n <= 8, ordered by the smaller side size
/// and lexicographically within each size.
VCone generate_cuts(int n);

/// The 3 C(n,3) triangle inequalities d_ij - d_ik - d_jk <= 0, orbit-sorted.
HCone generate_met(int n);

/// b^1..b^14, in order.
std::vector<BVector> hyp7_facet_representatives();

/// The representatives of the hypermetric facet orbits of HYP_n, n <= 7,
/// obtained by restricting the HYP_7 list to those with n-point support.
std::vector<BVector> hyp_facet_representatives(int n);

/// Full facet description of HYP_n, 3 <= n <= 7, orbit-major and
/// lexicographic within each orbit.
HCone generate_hyp(int n);

/// Non-hypermetric CUT_7 facet representatives O_1..O_26. Each is
/// nonnegative on every cut; as a "<= 0" inequality it cuts HYP_7 down to
/// the subcone it defines.
std::vector<Inequality> cut7_nonhypermetric_representatives();

/// Generators of the non-cut HYP_7 ray orbits R_4..R_29.
std::vector<RayVector> hyp7_ray_representatives();

/// Cut representatives of R_1..R_3: S = {1}, {1,2}, {1,2,3}.
std::vector<RayVector> hyp7_cut_representatives();

/// Cut set switching the class base onto O_{k+1}; nullopt for class bases.
std::optional<CutSet> cut7_switch_label(std::size_t k);

class NotIncidentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Negates the coefficients on pairs separated by S. Requires <f, delta_S> = 0.
Inequality switching(const Inequality& f, const CutSet& s);

/// Shortest-path distances of a connected graph.
RayVector path_metric(const SimpleGraph& g);

/// n! 2^n / C(2n, n).
Rational lovasz_bound(int n);

/// Visits one representative (entries sorted descending) of every Sym(n)
/// class of integer n-vectors with sum 1, entries in [-max_abs, max_abs] and
/// at least two nonzero entries. Enumeration is lexicographically decreasing.
void for_each_bvector(int n, int max_abs, const std::function<void(const BVector&)>& visit);
std::vector<BVector> enumerate_bvectors(int n, int max_abs);

}  // namespace hypercone
