#include "vein/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace vein::lp {

namespace {

constexpr double kPivotTol = 1e-11;

// Tableau rows: m constraint rows + 1 objective row. Columns: n variables
// + 1 rhs column. basis[i] is the variable basic in row i.
struct Tableau {
    Eigen::MatrixXd t;
    std::vector<int> basis;

    int rows() const { return static_cast<int>(t.rows()) - 1; }
    int cols() const { return static_cast<int>(t.cols()) - 1; }

    void pivot(int row, int col) {
        t.row(row) /= t(row, col);
        for (int r = 0; r < t.rows(); ++r) {
            if (r != row && std::abs(t(r, col)) > 0.0) t.row(r) -= t(r, col) * t.row(row);
        }
        basis[row] = col;
    }

    // Bland's rule: entering = lowest-index improving column, leaving =
    // lowest-index row among the min-ratio ties. Terminates without cycling.
    Status iterate(int ncols_usable) {
        const int m = rows();
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_usable; ++j) {
                if (t(m, j) < -kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return Status::optimal;

            int leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                if (t(i, enter) > kPivotTol) {
                    double ratio = t(i, cols()) / t(i, enter);
                    if (ratio < best - kPivotTol ||
                        (ratio < best + kPivotTol && (leave < 0 || basis[i] < basis[leave]))) {
                        best = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0) return Status::unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

Solution solve_equality_form(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                             const Eigen::VectorXd& c) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());

    // Phase 1: artificial variables n..n+m-1, minimize their sum.
    Tableau tab;
    tab.t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        double s = (b(i) < 0.0) ? -1.0 : 1.0;
        tab.t.block(i, 0, 1, n) = s * A.row(i);
        tab.t(i, n + i) = 1.0;
        tab.t(i, n + m) = s * b(i);
        tab.basis[i] = n + i;
    }
    for (int i = 0; i < m; ++i) tab.t.row(m) -= tab.t.row(i);

    if (tab.iterate(n + m) != Status::optimal) return {Status::infeasible, 0.0, {}};
    if (-tab.t(m, n + m) > 1e-8) return {Status::infeasible, 0.0, {}};

    // Drive any artificial still basic out of the basis (degenerate rows).
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (std::abs(tab.t(i, j)) > kPivotTol) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            tab.pivot(i, col);
        } else {
            tab.t.row(i).setZero();  // redundant constraint
            tab.basis[i] = -1;
        }
    }

    // Phase 2: real objective, artificial columns frozen.
    tab.t.row(m).setZero();
    tab.t.block(m, 0, 1, n) = c.transpose();
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= 0 && tab.basis[i] < n)
            tab.t.row(m) -= tab.t(m, tab.basis[i]) * tab.t.row(i);
    }

    Status st = tab.iterate(n);
    if (st != Status::optimal) return {st, 0.0, {}};

    Solution sol;
    sol.status = Status::optimal;
    sol.x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= 0 && tab.basis[i] < n) sol.x(tab.basis[i]) = tab.t(i, n + m);
    }
    sol.value = c.dot(sol.x);
    return sol;
}

}  // namespace vein::lp
