#pragma once

#include "sic/rational.hpp"

#include <string>
#include <vector>

namespace sic {

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Maximize, Minimize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

std::string to_string(LPStatus s);

struct LinearConstraint {
  std::vector<Rational> coeffs;  // one per variable
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Optimize objective . x subject to the constraints and x >= 0.
struct LinearProgram {
  int num_vars = 0;
  Sense sense = Sense::Maximize;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;

  void add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

/// Result of solve_lp_exact.
///
/// Dual multipliers `dual` follow the Lagrangian sign convention: for a
/// maximization, y_i >= 0 on <= rows, y_i <= 0 on >= rows, free on = rows, and
/// A^T y >= c; for a minimization the signs flip (y_i >= 0 on >= rows, A^T y <= c).
/// When optimal, objective . primal == rhs . dual == value exactly.
///
/// When infeasible, `ray` holds Farkas multipliers y (maximization sign
/// convention) with A^T y >= 0 and rhs . y < 0. When unbounded, `primal` is a
/// feasible point and `ray` an improving direction d >= 0.
struct ExactLPSolution {
  LPStatus status = LPStatus::Infeasible;
  Rational value;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::vector<Rational> ray;
  long pivots = 0;
};

/// Two-phase dictionary simplex over exact rationals with Bland's rule.
/// Infeasibility and unboundedness are reported through `status`. Every result
/// is re-checked by verify_certificate before it is returned.
ExactLPSolution solve_lp_exact(const LinearProgram& lp);

/// Exact re-check of a solution's certificates. Returns an empty string when
/// valid, otherwise a description of the first violation.
std::string verify_certificate(const LinearProgram& lp, const ExactLPSolution& sol);

}  // namespace sic
