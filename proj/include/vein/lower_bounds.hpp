#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace vein {

enum class CertKind {
    jensen2d,
    simplex,
    cap_area,
    spherical_case_c,
    octahedron_coordinate,
    ovr_ball_pajor,
    transfer,
};

enum class CertSide { lower, upper };

/// A named bound on the vertex index together with the data backing it.
/// checked is true only after the defining inequality was re-verified
/// numerically by the producing operation.
struct BoundCertificate {
    CertKind kind = CertKind::transfer;
    CertSide side = CertSide::lower;
    double value = 0.0;
    nlohmann::json witness;
    bool checked = false;
};

std::string to_string(CertKind k);
std::string to_string(CertSide s);

// --- planar and simplex devices ---------------------------------------------

/// n / cos(pi/n): lower bound on the vertex sum of an n-gon circumscribing
/// the unit disc. Minimal over n >= 3 at n = 4, where it equals 4*sqrt(2).
double planar_polygon_bound(int n);

/// d(d+1): vertex-sum lower bound for simplices circumscribing the unit ball.
double simplex_bound(int d);

/// n^2 / (n-2): cap-area route for n-vertex polyhedra circumscribing the
/// unit ball in 3-D; useful for n >= 8.
double cap_area_bound(int n);

// --- spherical machinery for the 3-D case -----------------------------------

/// Distance from the origin to the vertex seeing a regular spherical polygon
/// with `sides` sides and spherical area `area`: 1/cos of its circumradius,
/// tan(pi/y) * tan((x + (y-2) pi) / (2y)).
double regular_polygon_vertex_norm(double area, double sides);

/// Vertex-sum lower bound for an n-vertex polyhedron circumscribing the unit
/// ball when m of the polar's faces have area below 0.4:
/// m + (n-m) f((4 pi - 0.4 m)/(n-m), ((6n-12) - 3m)/(n-m)). Domain
/// 5 <= n <= 7, 0 <= m < n-1.
double vertex_sum_bound(int m, int n);

// domain thresholds of vertex_sum_bound, exposed read-only
constexpr double kSmallFaceAreaCut = 0.4;
constexpr double kLargeFaceAreaCap = 5.5;

/// Five-vertex (double tetrahedron) bound
/// 2 sqrt(3) tan((a+pi)/6) + 3 tan((5 pi - a)/12) on 0 <= a <= 5.5.
double five_vertex_bound(double a);

/// Minimum of five_vertex_bound over [0, 5.5]: grid scan plus golden-section
/// refinement to 1e-10.
double five_vertex_bound_min();

// --- numeric verification of the two-variable bound function -----------------

struct LemmaCheckItem {
    bool pass = true;
    double worst_value = 0.0;
    double worst_x = 0.0;
    double worst_y = 0.0;
};

struct LemmaCheckReport {
    LemmaCheckItem decreasing_in_sides;
    LemmaCheckItem increasing_in_area;
    LemmaCheckItem convex_in_area;
    LemmaCheckItem jointly_convex;  // on [0.4, 5.5] x [3, 9]
    bool all_pass() const {
        return decreasing_in_sides.pass && increasing_in_area.pass && convex_in_area.pass &&
               jointly_convex.pass;
    }
};

/// Finite-difference verification of the monotonicity/convexity properties
/// of regular_polygon_vertex_norm. `fn` overrides the function under test
/// (negative-control hook for the test suite).
LemmaCheckReport lemma_func_checks(double grid_step,
                                   std::function<double(double, double)> fn = {});

// --- coordinate certificate for the cross-polytope ---------------------------

/// If conv(points) contains the unit cross-polytope, the column-range sum
/// sum_k (max_i p_ik - min_i p_ik) is sandwiched between sum_i ||p_i||_1 and
/// 2d; re-verifies both inequalities and returns the lower certificate 2d.
/// Containment is certified via facets when d <= 3; above that the caller
/// must assert it (ContainmentUnverified otherwise).
BoundCertificate octahedron_certificate(const std::vector<Eigen::VectorXd>& points,
                                        bool assume_containment = false, double tol = 1e-9);

// --- volumetric route --------------------------------------------------------

struct BallPajorReport {
    double hull_volume = 0.0;         // vol(L), L = abs conv(points)
    double polar_volume = 0.0;        // vol(L polar)
    double norm_sum = 0.0;            // sum |p_i|
    double volume_lower_bound = 0.0;  // (d / norm_sum)^d
    double santalo_product = 0.0;     // vol(L) vol(L polar)
    double santalo_cap = 0.0;         // vol(B_2^d)^2
    bool volume_ok = false;
    bool santalo_ok = false;
};

/// Exact-geometry verification (d = 2, 3) of the polar volume bound
/// vol(L°) >= (d / sum|p_i|)^d and of the Santalo product bound.
BallPajorReport ball_pajor_check(const std::vector<Eigen::VectorXd>& points);

/// Volumetric lower certificate d / (vol(B_2^d)^{1/d} ovr); the weaker
/// closed form d^{3/2} / (sqrt(2 pi e) ovr) is recorded in the witness.
BoundCertificate ovr_lower_bound(int d, double ovr_value);

// --- spherical caps ----------------------------------------------------------

struct SphericalCap {
    Eigen::Vector3d center;  // unit vector
    double radius = 0.0;     // spherical radius in (0, pi/2)
    double area() const;     // 2 pi (1 - cos radius)
};

/// Cap of sphere points whose tangency horizon is crossed by the segment to
/// an exterior vertex p: center p/|p|, radius arccos(1/|p|).
SphericalCap cap_from_vertex(const Eigen::Vector3d& p);

struct CoveringReport {
    bool covered = false;
    Eigen::Vector3d worst_point;
    double worst_deficit = 0.0;  // positive iff worst_point uncovered
};

/// Do the caps cover the unit sphere? Deterministic Fibonacci point set,
/// n_samples >= 1000; a sampled check, not a proof.
CoveringReport cap_covering_check(const std::vector<SphericalCap>& caps, int n_samples);

/// sum n_i <= 6n - 12 for the face side counts of a 3-polytope with n faces.
bool euler_edge_bound(const std::vector<int>& face_side_counts);

// --- aggregated ball bounds ---------------------------------------------------

/// Proven lower bound for the Euclidean ball: 4 sqrt(2) in the plane (polygon
/// bound minimized over n), 6 sqrt(3) in 3-D (minimum over the simplex,
/// cap-area, mixed-face and five-vertex devices). Only d = 2, 3.
BoundCertificate euclidean_ball_lower_bound(int d);

}  // namespace vein
