#include "hypercone/hypermetric.hpp"

#include "hypercone/hyp7_tables.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hypercone {

BVector::BVector(IntVector b) : b_(std::move(b)) {
  if (b_.sum() != 1) {
    throw std::invalid_argument("BVector: entries of " + to_string(b_) + " must sum to 1");
  }
  if ((b_.array() != 0).count() < 2) {
    throw std::invalid_argument("BVector: " + to_string(b_) + " gives the zero inequality");
  }
}

CutSet::CutSet(int n, std::uint32_t mask, bool) : n_(n), mask_(mask) {}

CutSet CutSet::from_mask(int n, std::uint32_t mask) {
  if (n < 2 || n > 32) throw std::invalid_argument("CutSet: n must be in 2..32");
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1U;
  if (mask & ~full) throw std::invalid_argument("CutSet: point out of range");
  if (mask >> (n - 1) & 1U) mask = full & ~mask;
  if (mask == 0) throw std::invalid_argument("CutSet: empty and full sets give the zero cut");
  return CutSet(n, mask, true);
}

CutSet::CutSet(int n, const std::vector<int>& points) : CutSet(n, 0, true) {
  std::uint32_t mask = 0;
  for (int p : points) {
    if (p < 0 || p >= n) throw std::invalid_argument("CutSet: point " + std::to_string(p) + " out of range");
    mask |= 1U << p;
  }
  *this = from_mask(n, mask);
}

std::vector<int> CutSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string CutSet::label() const {
  std::string out = "{";
  for (int i : members()) {
    if (out.size() > 1) out += ',';
    out += std::to_string(i + 1);
  }
  return out + "}";
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw std::invalid_argument("SimpleGraph: need at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("SimpleGraph: endpoint out of range");
    if (a == b) throw std::invalid_argument("SimpleGraph: loop at vertex " + std::to_string(a + 1));
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw std::invalid_argument("SimpleGraph: repeated edge " + std::to_string(a + 1) + "-" +
                                  std::to_string(b + 1));
    }
  }
}

SimpleGraph SimpleGraph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return SimpleGraph(n, std::move(edges));
}

bool SimpleGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::find(edges_.begin(), edges_.end(), std::pair{i, j}) != edges_.end();
}

SimpleGraph SimpleGraph::without(const std::vector<std::pair<int, int>>& removed) const {
  std::vector<std::pair<int, int>> kept = edges_;
  for (auto [a, b] : removed) {
    if (a > b) std::swap(a, b);
    const auto it = std::find(kept.begin(), kept.end(), std::pair{a, b});
    if (it == kept.end()) throw std::invalid_argument("SimpleGraph::without: edge not present");
    kept.erase(it);
  }
  return SimpleGraph(n_, std::move(kept));
}

Inequality hypermetric_inequality(const BVector& b) {
  const int n = b.size();
  IntVector coeffs(pair_count(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) coeffs(pair_index(n, i, j)) = b[i] * b[j];
  }
  return Inequality(std::move(coeffs));
}

std::int64_t weight(const BVector& b, const CutSet& s) {
  if (b.size() != s.points_total()) throw DimensionError("weight: point counts differ");
  std::int64_t total = 0;
  for (int i : s.members()) total += b[i];
  return total;
}

RayVector cut_vector(const CutSet& s) {
  const int n = s.points_total();
  IntVector v(pair_count(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) v(pair_index(n, i, j)) = s.separates(i, j) ? 1 : 0;
  }
  return RayVector(std::move(v));
}

VCone generate_cuts(int n) {
  if (n < kMinCutPoints || n > kMaxCutPoints) {
    throw std::invalid_argument("generate_cuts: n must be in " + std::to_string(kMinCutPoints) + ".." +
                                std::to_string(kMaxCutPoints));
  }
  std::vector<std::pair<int, IntVector>> keyed;
  for (std::uint32_t mask = 1; mask < (1U << (n - 1)); ++mask) {
    const int size = std::popcount(mask);
    keyed.emplace_back(std::min(size, n - size), cut_vector(CutSet::from_mask(n, mask)).coords());
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : lex_less(a.second, b.second);
  });
  std::vector<RayVector> rays;
  for (auto& [size, v] : keyed) rays.emplace_back(std::move(v));
  return VCone(n, std::move(rays));
}

HCone generate_met(int n) {
  if (n < 3) throw std::invalid_argument("generate_met: n must be at least 3");
  std::vector<IntVector> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const int pairs[3][3] = {{i, j, k}, {i, k, j}, {j, k, i}};
        for (const auto& t : pairs) {
          IntVector v = IntVector::Zero(pair_count(n));
          v(pair_index(n, t[0], t[1])) = 1;
          v(pair_index(n, t[0], t[2])) = -1;
          v(pair_index(n, t[1], t[2])) = -1;
          rows.push_back(std::move(v));
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end(), LexLess{});
  return HCone(n, std::vector<Inequality>(rows.begin(), rows.end()));
}

std::vector<BVector> hyp7_facet_representatives() {
  return {
      {1, 1, -1, 0, 0, 0, 0},   {1, 1, 1, -1, -1, 0, 0},   {1, 1, 1, 1, -1, -2, 0},
      {2, 1, 1, -1, -1, -1, 0}, {1, 1, 1, 1, -1, -1, -1},  {2, 2, 1, -1, -1, -1, -1},
      {1, 1, 1, 1, 1, -2, -2},  {2, 1, 1, 1, -1, -1, -2},  {3, 1, 1, -1, -1, -1, -1},
      {1, 1, 1, 1, 1, -1, -3},  {2, 2, 1, 1, -1, -1, -3},  {3, 1, 1, 1, -1, -2, -2},
      {3, 2, 1, -1, -1, -1, -2}, {2, 1, 1, 1, 1, -2, -3},
  };
}

std::vector<BVector> hyp_facet_representatives(int n) {
  if (n < 3 || n > 7) throw std::invalid_argument("hyp_facet_representatives: n must be in 3..7");
  std::vector<BVector> out;
  for (const BVector& b : hyp7_facet_representatives()) {
    if (b.values().tail(7 - n).isZero()) out.emplace_back(IntVector(b.values().head(n)));
  }
  return out;
}

HCone generate_hyp(int n) {
  std::vector<Inequality> all;
  for (const BVector& b : hyp_facet_representatives(n)) {
    for (auto& v : orbit(hypermetric_inequality(b).coeffs(), n)) all.emplace_back(std::move(v));
  }
  return HCone(n, std::move(all));
}

std::vector<Inequality> cut7_nonhypermetric_representatives() {
  std::vector<Inequality> out;
  for (const auto& row : tables::kCut7Facets) out.emplace_back(make_int_vector(row));
  return out;
}

std::vector<RayVector> hyp7_ray_representatives() {
  std::vector<RayVector> out;
  for (const auto& row : tables::kHyp7Rays) out.emplace_back(make_int_vector(row));
  return out;
}

std::vector<RayVector> hyp7_cut_representatives() {
  return {cut_vector(CutSet(7, {0})), cut_vector(CutSet(7, {0, 1})), cut_vector(CutSet(7, {0, 1, 2}))};
}

std::optional<CutSet> cut7_switch_label(std::size_t k) {
  const auto& label = tables::kSwitchLabels.at(k);
  if (label.empty()) return std::nullopt;
  std::vector<int> points;
  for (int p : label) points.push_back(p - 1);
  return CutSet(7, points);
}

Inequality switching(const Inequality& f, const CutSet& s) {
  const int n = s.points_total();
  if (f.size() != pair_count(n)) throw DimensionError("switching: length mismatch");
  const std::int64_t value = evaluate(f, cut_vector(s));
  if (value != 0) {
    throw NotIncidentError("switching: inequality is not incident to the cut " + s.label() +
                           " (value " + std::to_string(value) + ")");
  }
  IntVector out = f.coeffs();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s.separates(i, j)) out(pair_index(n, i, j)) = -out(pair_index(n, i, j));
    }
  }
  return Inequality(std::move(out));
}

RayVector path_metric(const SimpleGraph& g) {
  const int n = g.vertices();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [a, b] : g.edges()) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  IntVector d(pair_count(n));
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] >= 0) continue;
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
    for (int t = s + 1; t < n; ++t) {
      if (dist[static_cast<std::size_t>(t)] < 0) throw std::invalid_argument("path_metric: graph is disconnected");
      d(pair_index(n, s, t)) = dist[static_cast<std::size_t>(t)];
    }
  }
  return RayVector(std::move(d));
}

Rational lovasz_bound(int n) {
  if (n < 2) throw std::invalid_argument("lovasz_bound: n must be at least 2");
  BigInt factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= k;
  BigInt central = 1;  // C(2n, n)
  for (int k = 1; k <= n; ++k) central = central * (n + k) / k;
  const BigInt power = BigInt(1) << n;
  return Rational(factorial * power) / Rational(central);
}

namespace {

void extend(int n, int max_abs, int pos, std::int64_t upper, std::int64_t remaining, IntVector& b,
            const std::function<void(const BVector&)>& visit) {
  const int left = n - pos;
  if (left == 0) {
    if (remaining == 0 && (b.array() != 0).count() >= 2) visit(BVector(b));
    return;
  }
  for (std::int64_t x = upper; x >= -max_abs; --x) {
    const std::int64_t rest = remaining - x;
    // Remaining entries lie in [-max_abs, x].
    if (rest > x * (left - 1) || rest < -static_cast<std::int64_t>(max_abs) * (left - 1)) continue;
    b(pos) = x;
    extend(n, max_abs, pos + 1, x, rest, b, visit);
  }
}

}  // namespace

void for_each_bvector(int n, int max_abs, const std::function<void(const BVector&)>& visit) {
  if (max_abs < 1) throw std::invalid_argument("enumerate_bvectors: max_abs must be at least 1");
  if (n < 2) throw std::invalid_argument("enumerate_bvectors: n must be at least 2");
  IntVector b(n);
  extend(n, max_abs, 0, max_abs, 1, b, visit);
}

std::vector<BVector> enumerate_bvectors(int n, int max_abs) {
  std::vector<BVector> out;
  for_each_bvector(n, max_abs, [&](const BVector& b) { out.push_back(b); });
  return out;
}

}  // namespace hypercone
