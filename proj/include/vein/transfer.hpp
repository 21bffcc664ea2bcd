#pragma once

#include <Eigen/Dense>

#include "vein/body.hpp"
#include "vein/lower_bounds.hpp"

namespace vein {

/// Certified sandwich L <= T K <= ratio * L for a pair of bodies.
struct DistanceWitness {
    Eigen::MatrixXd op;    // T
    double ratio = 1.0;    // lambda
    bool exhaustive = true;  // containments verified by full enumeration
};

/// Distance-product bound: an upper bound on one vertex index times a
/// Banach-Mazur distance upper-bounds the other.
double transfer_bound(double vein_upper_l, double distance);

/// Sylvester Hadamard matrix of order 2^m, entries +-1, H'H = d Id.
Eigen::MatrixXi sylvester_hadamard(int m);

/// Distance witness between the cross-polytope and the cube in d = 2^m,
/// ratio sqrt(d). Verifies H B_1 inside B_inf columnwise, and the reverse
/// containment over sign vectors: exhaustive integer enumeration for
/// d <= 16, random sign vectors plus the H'H = d Id identity above.
DistanceWitness hadamard_witness(int m);

/// Certified upper bound on the distance to the Euclidean ball via the
/// MVEE round trip: K inside E inside lambda K. Closed form d^{|1/p-1/2|}
/// for lp balls; exact polar-vertex maximization for polytopes in d <= 3.
double dist_to_ball_upper(const BodySpec& body);

struct VeinBoundPair {
    BoundCertificate lower;
    BoundCertificate upper;
};

/// Planar bounds: lower max(4 sqrt(2) / dist_to_ball_upper, 4), upper 6.
VeinBoundPair planar_vein_bound(const BodySpec& body);

/// 3-D analogue: lower max(6 sqrt(3) / dist, 6), upper dist * 6 sqrt(3).
VeinBoundPair spatial_vein_bound(const BodySpec& body);

}  // namespace vein
