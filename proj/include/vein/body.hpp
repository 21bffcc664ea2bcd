#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

namespace vein {

enum class BodyKind { lp_ball, ellipsoid, sym_polytope };

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Declarative description of an origin-symmetric convex body. Construct
/// through the factory functions, which validate the invariants (dimension
/// >= 2, positive-definite shape matrix, spanning generators).
struct BodySpec {
    BodyKind kind = BodyKind::lp_ball;
    int dim = 0;
    double p = 2.0;               // lp_ball exponent, kInfinity allowed
    Eigen::MatrixXd matrix;       // ellipsoid shape, {x : x' A^-1 x <= 1}
    Eigen::MatrixXd generators;   // sym_polytope generators, one per column

    static BodySpec lp_ball(double p, int dim);
    static BodySpec ellipsoid(const Eigen::MatrixXd& shape);
    static BodySpec sym_polytope(const Eigen::MatrixXd& generators);
};

// Dual exponent with the conventions q(1) = inf, q(inf) = 1.
double dual_exponent(double p);

double lp_norm(const Eigen::VectorXd& x, double p);

/// Minkowski functional ||x||_K = inf { t > 0 : x in t K }. Zero maps to
/// zero. For sym_polytope bodies this solves min sum|lambda| subject to
/// sum lambda_i v_i = x with the in-module dense simplex.
double gauge(const BodySpec& body, const Eigen::VectorXd& x);

/// Support function h_K(u) = max { <u,y> : y in K }.
double support(const BodySpec& body, const Eigen::VectorXd& u);

/// sum_i ||p_i||_K, the quantity minimized when circumscribing K.
double vein_objective(const BodySpec& body, const std::vector<Eigen::VectorXd>& points);

}  // namespace vein
