#pragma once

// Exact rational linear programming over free variables.
//
//   maximize / minimize  c . x
//   subject to           a_i . x <= b_i   or   a_i . x == b_i
//
// The solver runs a two-phase revised simplex with Bland's rule on the dual
// standard form, whose basis is only dim x dim. This suits the problems here:
// thousands of constraints in ~21 variables. Identical input (including
// constraint order) produces identical pivots.

#include "hypercone/scalar.hpp"

#include <vector>

namespace hypercone {

enum class Relation { kLessEqual, kEqual };
enum class Sense { kMinimize, kMaximize };

struct LinearConstraint {
  RationalVector coeffs;
  Relation relation = Relation::kLessEqual;
  Rational rhs = 0;
};

struct LPProblem {
  std::vector<LinearConstraint> constraints;
  RationalVector objective;
  Sense sense = Sense::kMaximize;

  Eigen::Index dimension() const { return objective.size(); }
};

enum class LPStatus { kOptimal, kUnbounded, kInfeasible };

struct LPResult {
  LPStatus status = LPStatus::kInfeasible;
  Rational value = 0;        // optimal objective (kOptimal only)
  RationalVector point;      // optimal point (kOptimal only)
  RationalVector ray;        // improving recession direction (kUnbounded only)
  std::size_t pivots = 0;    // simplex pivots over all phases
};

/// Solves `problem` exactly. Throws DimensionError on inconsistent sizes.
LPResult lp_solve(const LPProblem& problem);

const char* to_string(LPStatus status);

}  // namespace hypercone
