#include "hypercone/lp.hpp"

#include <optional>

namespace hypercone {

namespace {

// min cost . z  s.t.  A z = rhs, z >= 0, solved with Bland's rule.
// Variables 0..n-1 are structural; n..n+m-1 are phase-one artificials.
class StandardFormSimplex {
 public:
  enum class Outcome { kOptimal, kUnbounded, kInfeasible };

  StandardFormSimplex(Matrix<Rational> a, RationalVector rhs, RationalVector cost)
      : a_(std::move(a)), rhs_(std::move(rhs)), cost_(std::move(cost)) {
    m_ = a_.rows();
    n_ = a_.cols();
    row_sign_.assign(static_cast<std::size_t>(m_), 1);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (rhs_(i) < 0) {
        row_sign_[static_cast<std::size_t>(i)] = -1;
        a_.row(i) *= Rational(-1);
        rhs_(i) = -rhs_(i);
      }
    }
    // Column-major copy for pricing.
    columns_ = a_.transpose();
  }

  Outcome run() {
    binv_ = RationalMatrix::Identity(m_, m_);
    x_basic_ = rhs_;
    basis_.resize(static_cast<std::size_t>(m_));
    for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<std::size_t>(i)] = n_ + i;
    in_basis_.assign(static_cast<std::size_t>(n_ + m_), false);
    for (auto v : basis_) in_basis_[static_cast<std::size_t>(v)] = true;

    // Phase one: minimize the sum of artificials.
    RationalVector phase_one_cost = RationalVector::Constant(n_ + m_, Rational(0));
    for (Eigen::Index i = 0; i < m_; ++i) phase_one_cost(n_ + i) = 1;
    if (iterate(phase_one_cost) == Step::kUnbounded) {
      throw std::logic_error("phase one cannot be unbounded");
    }
    Rational infeasibility = 0;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] >= n_) infeasibility += x_basic_(i);
    }
    if (infeasibility > 0) {
      farkas_ = multipliers(phase_one_cost);
      apply_row_signs(*farkas_);
      return Outcome::kInfeasible;
    }
    drive_out_artificials();

    RationalVector phase_two_cost = RationalVector::Constant(n_ + m_, Rational(0));
    phase_two_cost.head(n_) = cost_;
    if (iterate(phase_two_cost) == Step::kUnbounded) return Outcome::kUnbounded;
    duals_ = multipliers(phase_two_cost);
    apply_row_signs(duals_);
    return Outcome::kOptimal;
  }

  /// y with y . A_j <= cost_j for all j and y . rhs = optimum (original row signs).
  const RationalVector& duals() const { return duals_; }
  /// y with y . A_j <= 0 for all j and y . rhs > 0 (original row signs).
  const RationalVector& farkas() const { return *farkas_; }
  std::size_t pivots() const { return pivots_; }

  Rational objective() const {
    Rational v = 0;
    for (Eigen::Index i = 0; i < m_; ++i) {
      const auto var = basis_[static_cast<std::size_t>(i)];
      if (var < n_) v += cost_(var) * x_basic_(i);
    }
    return v;
  }

 private:
  enum class Step { kOptimal, kUnbounded };

  RationalVector multipliers(const RationalVector& cost) const {
    RationalVector y = RationalVector::Constant(m_, Rational(0));
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Rational& cb = cost(basis_[static_cast<std::size_t>(i)]);
      if (cb == 0) continue;
      for (Eigen::Index k = 0; k < m_; ++k) {
        if (binv_(i, k) != 0) y(k) += cb * binv_(i, k);
      }
    }
    return y;
  }

  void apply_row_signs(RationalVector& y) const {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (row_sign_[static_cast<std::size_t>(i)] < 0) y(i) = -y(i);
    }
  }

  RationalVector column(Eigen::Index var) const {
    if (var < n_) return columns_.row(var).transpose();
    RationalVector e = RationalVector::Constant(m_, Rational(0));
    e(var - n_) = 1;
    return e;
  }

  RationalVector binv_times_column(Eigen::Index var) const {
    RationalVector out = RationalVector::Constant(m_, Rational(0));
    if (var >= n_) return binv_.col(var - n_);
    const auto col = columns_.row(var);
    for (Eigen::Index k = 0; k < m_; ++k) {
      if (col(k) == 0) continue;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (binv_(i, k) != 0) out(i) += binv_(i, k) * col(k);
      }
    }
    return out;
  }

  void pivot(Eigen::Index row, Eigen::Index entering, const RationalVector& alpha) {
    const Rational inv = 1 / alpha(row);
    binv_.row(row) *= inv;
    x_basic_(row) *= inv;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == row || alpha(i) == 0) continue;
      const Rational f = alpha(i);
      for (Eigen::Index k = 0; k < m_; ++k) {
        if (binv_(row, k) != 0) binv_(i, k) -= f * binv_(row, k);
      }
      x_basic_(i) -= f * x_basic_(row);
    }
    in_basis_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(row)])] = false;
    basis_[static_cast<std::size_t>(row)] = entering;
    in_basis_[static_cast<std::size_t>(entering)] = true;
    ++pivots_;
  }

  Step iterate(const RationalVector& cost) {
    for (;;) {
      const RationalVector y = multipliers(cost);
      // Bland: lowest-index structural column with negative reduced cost.
      std::optional<Eigen::Index> entering;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        Rational reduced = cost(j);
        const auto col = columns_.row(j);
        for (Eigen::Index k = 0; k < m_; ++k) {
          if (y(k) != 0 && col(k) != 0) reduced -= y(k) * col(k);
        }
        if (reduced < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return Step::kOptimal;
      const RationalVector alpha = binv_times_column(*entering);
      std::optional<Eigen::Index> leave;
      Rational best_ratio;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (alpha(i) <= 0) continue;
        const Rational ratio = x_basic_(i) / alpha(i);
        if (!leave || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(*leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (!leave) return Step::kUnbounded;
      pivot(*leave, *entering, alpha);
    }
  }

  void drive_out_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) continue;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        const RationalVector alpha = binv_times_column(j);
        if (alpha(i) != 0) {
          pivot(i, j, alpha);
          break;
        }
      }
      // A row with no structural support is redundant; its artificial stays at zero.
    }
  }

  RationalMatrix a_;
  RationalVector rhs_;
  RationalVector cost_;
  RationalMatrix columns_;
  Eigen::Index m_ = 0;
  Eigen::Index n_ = 0;
  std::vector<int> row_sign_;
  RationalMatrix binv_;
  RationalVector x_basic_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> in_basis_;
  RationalVector duals_;
  std::optional<RationalVector> farkas_;
  std::size_t pivots_ = 0;
};

struct DualForm {
  RationalMatrix a;
  RationalVector cost;
};

// Columns of the dual: one per <= row, two (+/-) per equality row.
DualForm dual_columns(const LPProblem& p) {
  const Eigen::Index dim = p.dimension();
  Eigen::Index cols = 0;
  for (const auto& c : p.constraints) cols += c.relation == Relation::kEqual ? 2 : 1;
  DualForm d{RationalMatrix(dim, cols), RationalVector(cols)};
  Eigen::Index j = 0;
  for (const auto& c : p.constraints) {
    d.a.col(j) = c.coeffs;
    d.cost(j) = c.rhs;
    ++j;
    if (c.relation == Relation::kEqual) {
      d.a.col(j) = -c.coeffs;
      d.cost(j) = -c.rhs;
      ++j;
    }
  }
  return d;
}

}  // namespace

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::kOptimal:
      return "optimal";
    case LPStatus::kUnbounded:
      return "unbounded";
    case LPStatus::kInfeasible:
      return "infeasible";
  }
  return "?";
}

LPResult lp_solve(const LPProblem& problem) {
  const Eigen::Index dim = problem.dimension();
  if (dim == 0) throw DimensionError("lp_solve: empty objective");
  for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
    if (problem.constraints[i].coeffs.size() != dim) {
      throw DimensionError("lp_solve: constraint " + std::to_string(i) + " has length " +
                           std::to_string(problem.constraints[i].coeffs.size()) +
                           ", objective has " + std::to_string(dim));
    }
  }
  const bool minimize = problem.sense == Sense::kMinimize;
  const RationalVector c = minimize ? RationalVector(-problem.objective) : problem.objective;

  DualForm dual = dual_columns(problem);
  LPResult result;
  StandardFormSimplex solver(dual.a, c, dual.cost);
  const auto outcome = solver.run();
  result.pivots = solver.pivots();

  if (outcome == StandardFormSimplex::Outcome::kOptimal) {
    result.status = LPStatus::kOptimal;
    result.point = solver.duals();
    Rational value = 0;
    for (Eigen::Index k = 0; k < dim; ++k) value += c(k) * result.point(k);
    result.value = minimize ? Rational(-value) : value;
    return result;
  }
  if (outcome == StandardFormSimplex::Outcome::kUnbounded) {
    result.status = LPStatus::kInfeasible;
    return result;
  }
  // Dual infeasible: the primal is unbounded along the Farkas direction if it
  // is feasible at all. Feasibility is decided by the zero-objective dual.
  const RationalVector ray = solver.farkas();
  StandardFormSimplex feasibility(dual.a, RationalVector::Constant(dim, Rational(0)), dual.cost);
  const auto feasible = feasibility.run();
  result.pivots += feasibility.pivots();
  if (feasible == StandardFormSimplex::Outcome::kUnbounded) {
    result.status = LPStatus::kInfeasible;
    return result;
  }
  result.status = LPStatus::kUnbounded;
  result.ray = ray;
  return result;
}

}  // namespace hypercone
