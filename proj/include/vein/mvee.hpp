#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "vein/body.hpp"

namespace vein {

/// Origin-centered ellipsoid {x : x' A^-1 x <= 1} with A positive definite.
struct EllipsoidShape {
    Eigen::MatrixXd matrix;
};

double ellipsoid_volume(const EllipsoidShape& e);

struct MveeResult {
    EllipsoidShape shape;
    int iterations = 0;
    double duality_gap = 0.0;  // max_i x_i' A^-1 x_i - 1 at termination, clipped at 0
};

/// Minimal-volume origin-centered ellipsoid containing {+-x_i}: Khachiyan
/// multiplicative-weights ascent on the symmetric formulation, with
/// Wolfe-Atwood away steps so tight tolerances converge. Every input point
/// satisfies x' A^-1 x <= 1 + eps on return.
MveeResult mvee_of_points(const std::vector<Eigen::VectorXd>& points, double eps = 1e-7,
                          int max_iters = 100000);

/// Volume of the Euclidean unit ball, pi^{d/2} / Gamma(1 + d/2).
double ball_volume(int d);

/// MVEE of a body: closed form for lp balls (round, radius d^{max(0,1/2-1/p)})
/// and ellipsoids (the body itself); Khachiyan on the generators otherwise.
MveeResult mvee_of_body(const BodySpec& body, double eps = 1e-7);

struct VolumeEstimate {
    double value = 0.0;
    double std_error = 0.0;  // zero for exact paths
    bool exact = true;
};

/// Volume of the body. Exact for lp balls, ellipsoids and d <= 3 polytopes;
/// seeded rejection sampling inside the MVEE in higher dimension. Throws
/// MonteCarloUnreliable when the relative standard error exceeds 5%.
VolumeEstimate body_volume(const BodySpec& body, std::uint64_t mc_samples = 1000000,
                           std::uint64_t mc_seed = 0x0ddba11);

/// Outer volume ratio (vol(MVEE) / vol(K))^{1/d}.
double ovr(const BodySpec& body);

}  // namespace vein
