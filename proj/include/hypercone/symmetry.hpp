#pragma once

// The action of Sym(n) on pair-indexed vectors.
//
// Pair (i, j), i < j, lives at the lexicographic position 12, 13, ..., 1n,
// 23, ..., (n-1)n. A point permutation p acts by relabelling points:
// (p . v)[(i, j)] = v[(p^-1(i), p^-1(j))].

#include "hypercone/scalar.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace hypercone {

/// Number of unordered pairs on n points.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Position of the pair {i, j} (0-based points, i != j).
constexpr int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Points (0-based) of the pair at `index`.
std::pair<int, int> pair_at(int n, int index);

/// Infers n from a vector length C(n, 2); throws DimensionError otherwise.
int points_for_length(Eigen::Index length);

class PointPermutation {
 public:
  /// `image[i]` is the image of point i (0-based). Throws unless a bijection.
  explicit PointPermutation(std::vector<int> image);
  static PointPermutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int point) const { return image_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& image() const { return image_; }

  PointPermutation inverse() const;
  /// (*this o other)(x) = (*this)(other(x)).
  PointPermutation compose(const PointPermutation& other) const;
  std::uint64_t key() const;

  friend bool operator==(const PointPermutation& a, const PointPermutation& b) {
    return a.image_ == b.image_;
  }

 private:
  std::vector<int> image_;
};

/// Relabels the points of a pair-indexed vector.
IntVector apply(const PointPermutation& p, const IntVector& v);

/// Relabels the points of a point-indexed vector: (p . b)_i = b_{p^-1(i)}.
IntVector apply_to_points(const PointPermutation& p, const IntVector& b);

/// A finite permutation group with the induced pair maps precomputed.
class PermutationGroup {
 public:
  PermutationGroup(int n, std::vector<PointPermutation> elements);

  int points() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const PointPermutation& element(std::size_t k) const { return elements_[k]; }
  const std::vector<PointPermutation>& elements() const { return elements_; }

  /// out = element(k) . v; `out` must already have the right length.
  void apply(std::size_t k, const IntVector& v, IntVector& out) const {
    const auto* src = &pair_source_[k * static_cast<std::size_t>(pairs_)];
    for (int t = 0; t < pairs_; ++t) out(t) = v(src[t]);
  }
  IntVector apply(std::size_t k, const IntVector& v) const {
    IntVector out(pairs_);
    apply(k, v, out);
    return out;
  }

  /// True iff the element list is closed under composition.
  bool is_closed() const;

 private:
  int n_;
  int pairs_;
  std::vector<PointPermutation> elements_;
  std::vector<std::uint8_t> pair_source_;
};

/// The full symmetric group on n points (n <= 8), built once and cached.
const PermutationGroup& symmetric_group(int n);

/// Lexicographic minimum of the Sym(n) orbit of `v`.
IntVector canonical_form(const IntVector& v, int n);

/// All distinct images of `v` under Sym(n), sorted lexicographically.
std::vector<IntVector> orbit(const IntVector& v, int n);

/// All permutations fixing `v`.
std::vector<PointPermutation> stabilizer(const IntVector& v, int n);

class GroupNotClosedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Transversal {
  std::vector<std::size_t> representatives;  // item indices, one per orbit, ascending
  std::vector<std::size_t> orbit_of;         // item index -> position in representatives
  std::vector<std::vector<std::size_t>> members;
};

/// Splits `items` into orbits of `group`. The group must be closed and must
/// map the item set into itself; both are checked.
Transversal orbit_transversal(std::span<const IntVector> items, const PermutationGroup& group);

/// Orbits of a list of representatives under Sym(n), expanded in full.
///
/// Members are stored orbit-major and lexicographically sorted within an
/// orbit. For every member the table keeps a transporter: an index into
/// symmetric_group(n) mapping the orbit representative onto the member.
class OrbitTable {
 public:
  OrbitTable(int n, std::vector<IntVector> representatives);

  int points() const { return n_; }
  std::size_t orbit_count() const { return representatives_.size(); }
  std::size_t member_count() const { return members_.size(); }

  const IntVector& representative(std::size_t orbit) const { return representatives_[orbit]; }
  const IntVector& canonical(std::size_t orbit) const { return canonical_[orbit]; }
  std::size_t orbit_size(std::size_t orbit) const { return offsets_[orbit + 1] - offsets_[orbit]; }
  std::size_t orbit_begin(std::size_t orbit) const { return offsets_[orbit]; }
  std::size_t orbit_end(std::size_t orbit) const { return offsets_[orbit + 1]; }

  const IntVector& member(std::size_t k) const { return members_[k]; }
  const std::vector<IntVector>& members() const { return members_; }
  std::size_t orbit_of(std::size_t k) const { return member_orbit_[k]; }
  std::size_t transporter(std::size_t k) const { return transporter_[k]; }

  /// Index of a member vector, if present.
  std::optional<std::size_t> find(const IntVector& v) const;
  /// Orbit containing `v`, if any.
  std::optional<std::size_t> classify(const IntVector& v) const;

 private:
  int n_;
  std::vector<IntVector> representatives_;
  std::vector<IntVector> canonical_;
  std::vector<std::size_t> offsets_;
  std::vector<IntVector> members_;
  std::vector<std::size_t> member_orbit_;
  std::vector<std::size_t> transporter_;
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> index_;
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> canonical_index_;
};

}  // namespace hypercone
