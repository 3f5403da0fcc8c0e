#pragma once

#include <Eigen/Dense>

namespace excc {

/// minimize c^T x subject to A x <= b, x free.
struct InequalityLp {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

struct LpSolution {
  double value = 0.0;
  Eigen::VectorXd x;
  int iterations = 0;
};

/// Dense two-phase simplex applied to the dual
///   minimize b^T y  s.t.  A^T y = -c, y >= 0,
/// which has one row per primal variable and stays small when there are
/// many more constraints than unknowns. Throws NumericalError when the
/// problem is infeasible or unbounded.
LpSolution solve_lp(const InequalityLp& lp);

}  // namespace excc
