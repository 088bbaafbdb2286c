#include "hypercone/symmetry.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace hypercone {

std::pair<int, int> pair_at(int n, int index) {
  for (int i = 0; i < n; ++i) {
    const int row = n - i - 1;
    if (index < row) return {i, i + 1 + index};
    index -= row;
  }
  throw std::out_of_range("pair_at: index out of range");
}

int points_for_length(Eigen::Index length) {
  for (int n = 2; n <= 64; ++n) {
    if (pair_count(n) == length) return n;
    if (pair_count(n) > length) break;
  }
  throw DimensionError("vector length " + std::to_string(length) + " is not C(n,2)");
}

PointPermutation::PointPermutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("PointPermutation: not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

PointPermutation PointPermutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return PointPermutation(std::move(image));
}

PointPermutation PointPermutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return PointPermutation(std::move(inv));
}

PointPermutation PointPermutation::compose(const PointPermutation& other) const {
  if (other.size() != size()) throw DimensionError("compose: permutation sizes differ");
  std::vector<int> out(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out[i] = image_[static_cast<std::size_t>(other.image_[i])];
  return PointPermutation(std::move(out));
}

std::uint64_t PointPermutation::key() const {
  std::uint64_t k = 0;
  for (int x : image_) k = k * 64 + static_cast<std::uint64_t>(x);
  return k;
}

IntVector apply(const PointPermutation& p, const IntVector& v) {
  const int n = p.size();
  if (v.size() != pair_count(n)) {
    throw DimensionError("apply: vector length " + std::to_string(v.size()) + " does not match n=" +
                         std::to_string(n));
  }
  const PointPermutation inv = p.inverse();
  IntVector out(v.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out(pair_index(n, i, j)) = v(pair_index(n, inv(i), inv(j)));
  }
  return out;
}

IntVector apply_to_points(const PointPermutation& p, const IntVector& b) {
  if (b.size() != p.size()) throw DimensionError("apply_to_points: length mismatch");
  IntVector out(b.size());
  for (int i = 0; i < p.size(); ++i) out(p(i)) = b(i);
  return out;
}

PermutationGroup::PermutationGroup(int n, std::vector<PointPermutation> elements)
    : n_(n), pairs_(pair_count(n)), elements_(std::move(elements)) {
  pair_source_.resize(elements_.size() * static_cast<std::size_t>(pairs_));
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (elements_[k].size() != n) throw DimensionError("PermutationGroup: element size mismatch");
    const PointPermutation inv = elements_[k].inverse();
    auto* src = &pair_source_[k * static_cast<std::size_t>(pairs_)];
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        src[pair_index(n, i, j)] = static_cast<std::uint8_t>(pair_index(n, inv(i), inv(j)));
      }
    }
  }
}

bool PermutationGroup::is_closed() const {
  std::unordered_set<std::uint64_t> keys;
  for (const auto& e : elements_) keys.insert(e.key());
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      std::uint64_t k = 0;
      for (int x = 0; x < n_; ++x) k = k * 64 + static_cast<std::uint64_t>(a(b(x)));
      if (!keys.contains(k)) return false;
    }
  }
  return true;
}

const PermutationGroup& symmetric_group(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("symmetric_group: n must be in 1..8");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PermutationGroup>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<PointPermutation> all;
    do {
      all.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    slot = std::make_unique<PermutationGroup>(n, std::move(all));
  }
  return *slot;
}

IntVector canonical_form(const IntVector& v, int n) {
  const auto& group = symmetric_group(n);
  if (v.size() != pair_count(n)) throw DimensionError("canonical_form: length mismatch");
  IntVector best = v;
  IntVector image(v.size());
  for (std::size_t k = 0; k < group.order(); ++k) {
    group.apply(k, v, image);
    if (lex_less(image, best)) best = image;
  }
  return best;
}

std::vector<IntVector> orbit(const IntVector& v, int n) {
  const auto& group = symmetric_group(n);
  if (v.size() != pair_count(n)) throw DimensionError("orbit: length mismatch");
  std::unordered_set<IntVector, VectorHash, VectorEqual> seen;
  for (std::size_t k = 0; k < group.order(); ++k) seen.insert(group.apply(k, v));
  std::vector<IntVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

std::vector<PointPermutation> stabilizer(const IntVector& v, int n) {
  const auto& group = symmetric_group(n);
  if (v.size() != pair_count(n)) throw DimensionError("stabilizer: length mismatch");
  std::vector<PointPermutation> out;
  IntVector image(v.size());
  for (std::size_t k = 0; k < group.order(); ++k) {
    group.apply(k, v, image);
    if (equal(image, v)) out.push_back(group.element(k));
  }
  return out;
}

Transversal orbit_transversal(std::span<const IntVector> items, const PermutationGroup& group) {
  if (!group.is_closed()) throw GroupNotClosedError("orbit_transversal: group is not closed");
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> index;
  for (std::size_t i = 0; i < items.size(); ++i) index.emplace(items[i], i);

  Transversal t;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  t.orbit_of.assign(items.size(), kUnassigned);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (t.orbit_of[i] != kUnassigned || index.at(items[i]) != i) continue;
    const std::size_t id = t.representatives.size();
    t.representatives.push_back(i);
    std::vector<std::size_t> members;
    for (std::size_t k = 0; k < group.order(); ++k) {
      const auto it = index.find(group.apply(k, items[i]));
      if (it == index.end()) {
        throw std::invalid_argument("orbit_transversal: group does not preserve the item set");
      }
      if (t.orbit_of[it->second] == kUnassigned) {
        t.orbit_of[it->second] = id;
        members.push_back(it->second);
      }
    }
    // Duplicated items share a vector; fold them into the orbit of their first copy.
    std::sort(members.begin(), members.end());
    t.members.push_back(std::move(members));
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (t.orbit_of[i] == kUnassigned) {
      const std::size_t first = index.at(items[i]);
      t.orbit_of[i] = t.orbit_of[first];
      t.members[t.orbit_of[i]].push_back(i);
    }
  }
  return t;
}

OrbitTable::OrbitTable(int n, std::vector<IntVector> representatives)
    : n_(n), representatives_(std::move(representatives)) {
  const auto& group = symmetric_group(n);
  offsets_.push_back(0);
  for (std::size_t o = 0; o < representatives_.size(); ++o) {
    const IntVector& rep = representatives_[o];
    if (rep.size() != pair_count(n)) throw DimensionError("OrbitTable: length mismatch");
    std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> images;
    for (std::size_t k = 0; k < group.order(); ++k) images.try_emplace(group.apply(k, rep), k);
    std::vector<std::pair<IntVector, std::size_t>> sorted(images.begin(), images.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    const IntVector& canon = sorted.front().first;
    if (canonical_index_.contains(canon)) {
      throw std::invalid_argument("OrbitTable: representatives " +
                                  std::to_string(canonical_index_.at(canon)) + " and " +
                                  std::to_string(o) + " lie in the same orbit");
    }
    canonical_index_.emplace(canon, o);
    canonical_.push_back(canon);
    for (auto& [vec, perm] : sorted) {
      index_.emplace(vec, members_.size());
      members_.push_back(vec);
      member_orbit_.push_back(o);
      transporter_.push_back(perm);
    }
    offsets_.push_back(members_.size());
  }
}

std::optional<std::size_t> OrbitTable::find(const IntVector& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> OrbitTable::classify(const IntVector& v) const {
  if (const auto k = find(v)) return member_orbit_[*k];
  return std::nullopt;
}

}  // namespace hypercone
