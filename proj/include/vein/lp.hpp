#pragma once

#include <Eigen/Dense>

namespace vein::lp {

enum class Status { optimal, infeasible, unbounded };

struct Solution {
    Status status = Status::optimal;
    double value = 0.0;
    Eigen::VectorXd x;
};

// Solves   min c'x  s.t.  A x = b, x >= 0
// with a dense two-phase simplex using Bland's rule. Sized for desk-scale
// problems (tens of variables); not a general-purpose solver.
Solution solve_equality_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c);

}  // namespace vein::lp
