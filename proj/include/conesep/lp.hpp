#pragma once

#include <Eigen/Dense>

namespace conesep {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

struct LpOptions {
  double pivot_tol = 1e-11;
  double cost_tol = 1e-11;
  double feas_tol = 1e-9;  // phase-one objective accepted as zero
  int max_iter = 20000;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Eigen::VectorXd x;
  double objective = 0.0;
  int iterations = 0;
};

/// Dense two-phase simplex for  min c^T x  s.t.  A x = b,  x >= 0.
///
/// Dantzig pricing with a switch to Bland's rule after a run of degenerate
/// pivots. Intended for the small problems that arise here (a handful of
/// rows, at most a few thousand columns).
LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                  const Eigen::VectorXd& c, const LpOptions& opt = {});

/// Phase one only: is {x >= 0 : A x = b} nonempty?
LpResult find_feasible(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                       const LpOptions& opt = {});

}  // namespace conesep
