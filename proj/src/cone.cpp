#include "hypercone/cone.hpp"

#include "hypercone/linalg.hpp"
#include "hypercone/lp.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace hypercone {

namespace {

void check_nonzero(const IntVector& v, const char* what) {
  if (content(v) == 0) throw std::invalid_argument(std::string(what) + ": zero vector");
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out(k) = Rational(v(k));
  return out;
}

IntMatrix stack_rows(const std::vector<IntVector>& rows, Eigen::Index dim) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

std::vector<std::size_t> sorted_intersection(const std::vector<std::size_t>& a,
                                             const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Exact <g, x> for an integer x of arbitrary size.
BigInt big_dot(const IntVector& g, const Vector<BigInt>& x) {
  BigInt acc = 0;
  for (Eigen::Index k = 0; k < g.size(); ++k) {
    if (g(k) != 0) acc += x(k) * g(k);
  }
  return acc;
}

}  // namespace

Inequality::Inequality(IntVector coeffs) : coeffs_(std::move(coeffs)) {
  check_nonzero(coeffs_, "Inequality");
  const std::int64_t g = content(coeffs_);
  if (g > 1) coeffs_ /= g;
}

RayVector::RayVector(IntVector coords) : coords_(std::move(coords)) {
  check_nonzero(coords_, "RayVector");
  std::int64_t g = content(coords_);
  for (Eigen::Index k = 0; k < coords_.size(); ++k) {
    if (coords_(k) != 0) {
      if (coords_(k) < 0) g = -g;
      break;
    }
  }
  if (g != 1) coords_ /= g;
}

HCone::HCone(int n, std::vector<Inequality> inequalities)
    : n_(n), dim_(pair_count(n)), inequalities_(std::move(inequalities)) {
  std::unordered_set<IntVector, VectorHash, VectorEqual> seen;
  matrix_.resize(static_cast<Eigen::Index>(inequalities_.size()), dim_);
  for (std::size_t i = 0; i < inequalities_.size(); ++i) {
    const IntVector& v = inequalities_[i].coeffs();
    if (v.size() != dim_) {
      throw DimensionError("HCone: inequality " + std::to_string(i) + " has length " +
                           std::to_string(v.size()) + ", expected " + std::to_string(dim_));
    }
    if (!seen.insert(v).second) {
      throw std::invalid_argument("HCone: duplicate inequality " + to_string(v));
    }
    matrix_.row(static_cast<Eigen::Index>(i)) = v.transpose();
  }
}

VCone::VCone(int n, std::vector<RayVector> rays) : n_(n), dim_(pair_count(n)), rays_(std::move(rays)) {
  std::unordered_set<IntVector, VectorHash, VectorEqual> seen;
  matrix_.resize(static_cast<Eigen::Index>(rays_.size()), dim_);
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const IntVector& v = rays_[i].coords();
    if (v.size() != dim_) {
      throw DimensionError("VCone: ray " + std::to_string(i) + " has length " +
                           std::to_string(v.size()) + ", expected " + std::to_string(dim_));
    }
    if (!seen.insert(v).second) throw std::invalid_argument("VCone: repeated ray " + to_string(v));
    matrix_.row(static_cast<Eigen::Index>(i)) = v.transpose();
  }
}

NotInConeError::NotInConeError(std::size_t inequality, std::int64_t value)
    : std::domain_error("point violates inequality " + std::to_string(inequality) + " (value " +
                        std::to_string(value) + ")"),
      inequality_(inequality),
      value_(value) {}

InvalidInequalityError::InvalidInequalityError(std::size_t ray, std::int64_t value)
    : std::domain_error("inequality is violated by ray " + std::to_string(ray) + " (value " +
                        std::to_string(value) + ")"),
      ray_(ray),
      value_(value) {}

DisconnectedGraphError::DisconnectedGraphError(std::size_t source, std::size_t reached,
                                               std::size_t total)
    : std::runtime_error("graph is disconnected: BFS from " + std::to_string(source) + " reached " +
                         std::to_string(reached) + " of " + std::to_string(total) + " vertices"),
      source_(source) {}

std::int64_t evaluate(const Inequality& f, const RayVector& r) { return dot(f.coeffs(), r.coords()); }
std::int64_t evaluate(const Inequality& f, const IntVector& x) { return dot(f.coeffs(), x); }

std::vector<std::size_t> tight_set(const HCone& c, const RayVector& r) {
  if (r.size() != c.dim()) throw DimensionError("tight_set: ray length does not match the cone");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t v = evaluate(c[i], r);
    if (v > 0) throw NotInConeError(i, v);
    if (v == 0) out.push_back(i);
  }
  return out;
}

bool is_extreme_ray(const HCone& c, const RayVector& r) {
  const auto tight = tight_set(c, r);
  const auto target = static_cast<std::size_t>(c.dim() - 1);
  return integer_rank(c.matrix(), tight, target) == target;
}

namespace {

std::vector<std::size_t> incident_rays(const VCone& c, const Inequality& f) {
  if (f.size() != c.dim()) throw DimensionError("inequality length does not match the cone");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::int64_t v = evaluate(f, c[i]);
    if (v > 0) throw InvalidInequalityError(i, v);
    if (v == 0) out.push_back(i);
  }
  return out;
}

}  // namespace

bool is_facet(const VCone& c, const Inequality& f) {
  const auto incident = incident_rays(c, f);
  const auto dim = static_cast<std::size_t>(c.dim());
  return integer_rank(c.matrix(), incident, dim) == dim - 1;
}

bool rays_adjacent(const HCone& c, const RayVector& r1, const RayVector& r2) {
  if (!is_extreme_ray(c, r1) || !is_extreme_ray(c, r2)) {
    throw std::invalid_argument("rays_adjacent: argument is not an extreme ray");
  }
  if (r1 == r2) return false;
  const auto common = sorted_intersection(tight_set(c, r1), tight_set(c, r2));
  const auto target = static_cast<std::size_t>(c.dim() - 2);
  return integer_rank(c.matrix(), common, target) == target;
}

bool facets_adjacent(const VCone& c, const Inequality& f1, const Inequality& f2) {
  if (!is_facet(c, f1) || !is_facet(c, f2)) {
    throw std::invalid_argument("facets_adjacent: argument is not a facet");
  }
  if (f1 == f2) return false;
  const auto common = sorted_intersection(incident_rays(c, f1), incident_rays(c, f2));
  const auto target = static_cast<std::size_t>(c.dim() - 2);
  return integer_rank(c.matrix(), common, target) == target;
}

ProbeOutcome redundancy_probe(const IntVector& f, const IntMatrix& constraints,
                              std::span<const std::size_t> rows) {
  const Eigen::Index dim = f.size();
  if (constraints.cols() != dim) throw DimensionError("redundancy_probe: length mismatch");
  LPProblem lp;
  lp.sense = Sense::kMaximize;
  lp.objective = to_rational(f);
  lp.constraints.reserve(rows.size() + 1);
  for (std::size_t id : rows) {
    lp.constraints.push_back(
        {to_rational(constraints.row(static_cast<Eigen::Index>(id)).transpose()), Relation::kLessEqual, 0});
  }
  lp.constraints.push_back({RationalVector::Constant(dim, Rational(1)), Relation::kEqual, 1});

  ProbeOutcome out;
  const LPResult result = lp_solve(lp);
  out.pivots = result.pivots;
  if (result.status == LPStatus::kInfeasible ||
      (result.status == LPStatus::kOptimal && result.value <= 0)) {
    out.redundant = true;
    return out;
  }
  RationalVector x;
  if (result.status == LPStatus::kOptimal) {
    x = result.point;
  } else {
    // Unbounded: walk from any slice point along the improving ray.
    LPProblem feasibility = lp;
    feasibility.objective = RationalVector::Constant(dim, Rational(0));
    const LPResult base = lp_solve(feasibility);
    out.pivots += base.pivots;
    if (base.status != LPStatus::kOptimal) throw std::logic_error("redundancy_probe: lost feasibility");
    const Rational at_base = lp.objective.dot(base.point);
    const Rational slope = lp.objective.dot(result.ray);
    if (slope <= 0) throw std::logic_error("redundancy_probe: ray does not improve");
    Rational t = 1;
    if (at_base <= 0) t += -at_base / slope;
    x = base.point + result.ray * t;
  }
  for (const auto& c : lp.constraints) {
    const Rational lhs = c.coeffs.dot(x);
    if (c.relation == Relation::kLessEqual ? lhs > c.rhs : lhs != c.rhs) {
      throw std::logic_error("redundancy_probe: LP returned an infeasible point");
    }
  }
  out.violating_point = std::move(x);
  return out;
}

bool is_redundant(const HCone& c, std::size_t index) {
  if (index >= c.size()) throw std::out_of_range("is_redundant: index out of range");
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i != index) others.push_back(i);
  }
  return redundancy_probe(c[index].coeffs(), c.matrix(), others).redundant;
}

bool is_redundant(int n, std::span<const Inequality> list, std::size_t index) {
  if (index >= list.size()) throw std::out_of_range("is_redundant: index out of range");
  const Eigen::Index dim = pair_count(n);
  std::vector<IntVector> rows;
  for (const auto& f : list) {
    if (f.size() != dim) throw DimensionError("is_redundant: length mismatch");
    rows.push_back(f.coeffs());
  }
  const IntMatrix m = stack_rows(rows, dim);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i != index) others.push_back(i);
  }
  return redundancy_probe(list[index].coeffs(), m, others).redundant;
}

std::optional<IntVector> interior_point(const HCone& c) {
  const Eigen::Index dim = c.dim();
  // maximize t  s.t.  <g, x> + t <= 0,  sum(x) = 1,  t <= 1.
  LPProblem lp;
  lp.sense = Sense::kMaximize;
  lp.objective = RationalVector::Constant(dim + 1, Rational(0));
  lp.objective(dim) = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    RationalVector row(dim + 1);
    row.head(dim) = to_rational(c[i].coeffs());
    row(dim) = 1;
    lp.constraints.push_back({std::move(row), Relation::kLessEqual, 0});
  }
  RationalVector slice = RationalVector::Constant(dim + 1, Rational(1));
  slice(dim) = 0;
  lp.constraints.push_back({std::move(slice), Relation::kEqual, 1});
  RationalVector cap = RationalVector::Constant(dim + 1, Rational(0));
  cap(dim) = 1;
  lp.constraints.push_back({std::move(cap), Relation::kLessEqual, 1});

  const LPResult result = lp_solve(lp);
  if (result.status != LPStatus::kOptimal || result.value <= 0) return std::nullopt;
  return primitive_int64(RationalVector(result.point.head(dim)));
}

namespace {

class RedundancySolver {
 public:
  RedundancySolver(int n, std::vector<IntVector> rows, const RedundancyOptions& options)
      : n_(n), dim_(pair_count(n)), rows_(std::move(rows)), options_(options) {
    matrix_ = stack_rows(rows_, dim_);
    if (options_.group) {
      transversal_ = orbit_transversal(rows_, *options_.group);
    } else {
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        transversal_.representatives.push_back(i);
        transversal_.orbit_of.push_back(i);
        transversal_.members.push_back({i});
      }
    }
    verdict_.assign(transversal_.members.size(), Verdict::kUnknown);
  }

  std::vector<bool> run(std::size_t& probes) {
    if (options_.method == RedundancyMethod::kIncremental) prepare_interior();
    for (std::size_t o = 0; o < transversal_.representatives.size(); ++o) {
      if (verdict_[o] != Verdict::kUnknown) continue;
      const std::size_t f = transversal_.representatives[o];
      const Verdict v = options_.method == RedundancyMethod::kIncremental ? incremental(f, probes)
                                                                          : exhaustive(f, probes);
      if (v == Verdict::kRedundant) {
        verdict_[o] = v;
      } else if (verdict_[o] != Verdict::kEssential) {
        mark_essential(o);
      }
    }
    std::vector<bool> keep(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      keep[i] = verdict_[transversal_.orbit_of[i]] == Verdict::kEssential;
    }
    return keep;
  }

 private:
  enum class Verdict { kUnknown, kEssential, kRedundant };

  void prepare_interior() {
    if (options_.interior) {
      interior_ = *options_.interior;
    } else {
      const auto p = interior_point(HCone(n_, std::vector<Inequality>(rows_.begin(), rows_.end())));
      if (!p) throw std::invalid_argument("remove_redundancy: cone is not full-dimensional");
      interior_ = *p;
    }
    if (interior_.size() != dim_) throw DimensionError("remove_redundancy: interior point length");
    interior_values_.resize(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      interior_values_[i] = dot(rows_[i], interior_);
      if (interior_values_[i] >= 0) {
        throw std::invalid_argument("remove_redundancy: supplied point is not strictly interior");
      }
    }
  }

  Verdict exhaustive(std::size_t f, std::size_t& probes) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != f) others.push_back(i);
    }
    ++probes;
    return redundancy_probe(rows_[f], matrix_, others).redundant ? Verdict::kRedundant
                                                                 : Verdict::kEssential;
  }

  void mark_essential(std::size_t orbit) {
    verdict_[orbit] = Verdict::kEssential;
    for (std::size_t i : transversal_.members[orbit]) essential_rows_.push_back(i);
  }

  Verdict incremental(std::size_t f, std::size_t& probes) {
    const std::size_t own_orbit = transversal_.orbit_of[f];
    for (;;) {
      ++probes;
      const ProbeOutcome probe = redundancy_probe(rows_[f], matrix_, essential_rows_);
      if (probe.redundant) return Verdict::kRedundant;
      const auto hit = first_hit(*probe.violating_point);
      if (!hit) return exhaustive(f, probes);
      const std::size_t orbit = transversal_.orbit_of[*hit];
      if (verdict_[orbit] == Verdict::kEssential) {
        throw std::logic_error("remove_redundancy: ray shot hit a known essential inequality");
      }
      mark_essential(orbit);
      if (orbit == own_orbit) return Verdict::kEssential;
    }
  }

  // Unique first inequality crossed on the segment from the interior point to
  // x; nullopt on a tie.
  std::optional<std::size_t> first_hit(const RationalVector& x) const {
    const Vector<BigInt> target = primitive_integer(x);
    // Crossing time of g: -a / (b - a) with a = <g, p> < 0 and b = <g, target> > 0.
    std::optional<std::size_t> best;
    BigInt best_num, best_den;
    bool tie = false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const BigInt b = big_dot(rows_[i], target);
      if (b <= 0) continue;
      const BigInt a = interior_values_[i];
      const BigInt num = -a;
      const BigInt den = b - a;
      if (!best) {
        best = i;
        best_num = num;
        best_den = den;
        continue;
      }
      const BigInt lhs = num * best_den;
      const BigInt rhs = best_num * den;
      if (lhs < rhs) {
        best = i;
        best_num = num;
        best_den = den;
        tie = false;
      } else if (lhs == rhs) {
        tie = true;
      }
    }
    if (!best) throw std::logic_error("remove_redundancy: violating point lies in the cone");
    if (tie) return std::nullopt;
    return best;
  }

  int n_;
  Eigen::Index dim_;
  std::vector<IntVector> rows_;
  const RedundancyOptions& options_;
  IntMatrix matrix_;
  Transversal transversal_;
  std::vector<Verdict> verdict_;
  std::vector<std::size_t> essential_rows_;
  IntVector interior_;
  std::vector<std::int64_t> interior_values_;
};

}  // namespace

RedundancyResult remove_redundancy(int n, std::span<const Inequality> list,
                                   const RedundancyOptions& options) {
  const Eigen::Index dim = pair_count(n);
  std::unordered_map<IntVector, std::size_t, VectorHash, VectorEqual> first;
  std::vector<IntVector> rows;
  std::vector<std::size_t> source;
  std::size_t duplicates = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].size() != dim) throw DimensionError("remove_redundancy: length mismatch");
    if (first.try_emplace(list[i].coeffs(), i).second) {
      rows.push_back(list[i].coeffs());
      source.push_back(i);
    } else {
      ++duplicates;
    }
  }
  std::size_t probes = 0;
  RedundancySolver solver(n, std::move(rows), options);
  const std::vector<bool> keep = solver.run(probes);

  std::vector<Inequality> survivors;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!keep[i]) continue;
    kept.push_back(source[i]);
    survivors.push_back(list[source[i]]);
  }
  return RedundancyResult{HCone(n, std::move(survivors)), std::move(kept), probes, duplicates};
}

RedundancyResult remove_redundancy(const HCone& c, const RedundancyOptions& options) {
  return remove_redundancy(c.points(), c.inequalities(), options);
}

namespace {

using ZeroSet = std::bitset<kDoubleDescriptionMaxInequalities>;

struct DDRay {
  IntVector v;
  ZeroSet zeros;
};

IntVector normalized_combination(std::int64_t a, const IntVector& p, std::int64_t b, const IntVector& q) {
  IntVector out(p.size());
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    out(k) = checked_narrow(static_cast<__int128>(a) * p(k) + static_cast<__int128>(b) * q(k));
  }
  const std::int64_t g = content(out);
  if (g > 1) out /= g;
  return out;
}

}  // namespace

VCone double_description(const HCone& c) {
  const Eigen::Index dim = c.dim();
  if (dim > kDoubleDescriptionMaxDim || c.size() > kDoubleDescriptionMaxInequalities) {
    throw SizeGuardError("double_description: dim " + std::to_string(dim) + " with " +
                         std::to_string(c.size()) + " inequalities exceeds the limit (dim <= " +
                         std::to_string(kDoubleDescriptionMaxDim) + ", count <= " +
                         std::to_string(kDoubleDescriptionMaxInequalities) + ")");
  }
  const IntMatrix& a = c.matrix();

  // Initial simplex cone on the first maximal independent set of rows.
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < c.size() && basis.size() < static_cast<std::size_t>(dim); ++i) {
    basis.push_back(i);
    if (integer_rank(a, basis) < basis.size()) basis.pop_back();
  }
  if (basis.size() != static_cast<std::size_t>(dim)) {
    throw std::invalid_argument("double_description: cone is not pointed");
  }
  std::vector<DDRay> rays;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    RationalMatrix others(dim - 1, dim);
    Eigen::Index r = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j == k) continue;
      for (Eigen::Index col = 0; col < dim; ++col) others(r, col) = Rational(a(static_cast<Eigen::Index>(basis[j]), col));
      ++r;
    }
    const auto kernel = nullspace_basis(others);
    IntVector v = primitive_int64(kernel.front());
    if (dot(a.row(static_cast<Eigen::Index>(basis[k])), v) > 0) v = -v;
    DDRay ray{std::move(v), {}};
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != k) ray.zeros.set(basis[j]);
    }
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(c.size(), false);
  for (auto i : basis) in_basis[i] = true;
  for (std::size_t g = 0; g < c.size(); ++g) {
    if (in_basis[g]) continue;
    const auto row = a.row(static_cast<Eigen::Index>(g));
    std::vector<std::int64_t> value(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = dot(row, rays[k].v);
      if (value[k] > 0) pos.push_back(k);
      if (value[k] < 0) neg.push_back(k);
    }
    if (pos.empty()) {
      for (std::size_t k = 0; k < rays.size(); ++k) {
        if (value[k] == 0) rays[k].zeros.set(g);
      }
      continue;
    }
    std::vector<DDRay> next;
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const ZeroSet common = rays[p].zeros & rays[q].zeros;
        if (static_cast<Eigen::Index>(common.count()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && (common & ~rays[r].zeros).none()) adjacent = false;
        }
        if (!adjacent) continue;
        DDRay fresh{normalized_combination(value[p], rays[q].v, -value[q], rays[p].v), common};
        fresh.zeros.set(g);
        next.push_back(std::move(fresh));
      }
    }
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (value[k] > 0) continue;
      if (value[k] == 0) rays[k].zeros.set(g);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
  }

  std::vector<IntVector> vectors;
  for (auto& r : rays) {
    const Eigen::Index lead = [&] {
      Eigen::Index k = 0;
      while (r.v(k) == 0) ++k;
      return k;
    }();
    if (r.v(lead) < 0) {
      throw std::domain_error("double_description: ray " + to_string(r.v) +
                              " has a negative leading entry");
    }
    vectors.push_back(std::move(r.v));
  }
  std::sort(vectors.begin(), vectors.end(), LexLess{});
  std::vector<RayVector> out;
  for (auto& v : vectors) out.emplace_back(std::move(v));
  return VCone(c.points(), std::move(out));
}

}  // namespace hypercone
