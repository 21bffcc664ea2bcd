#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "vein/body.hpp"

namespace vein {

struct Facet {
    Eigen::VectorXd normal;  // unit outward normal
    double offset = 0.0;     // facet is {x : <normal,x> = offset}, offset of the halfspace
};

struct Polytope {
    std::vector<Eigen::VectorXd> vertices;
    std::optional<std::vector<Facet>> facets;
};

/// Facets of conv(vertices) as (unit outward normal, offset) pairs.
/// d = 2 uses a monotone-chain hull, d = 3 an incremental hull; throws
/// DegenerateHull when the points lie in a hyperplane.
std::vector<Facet> hull_facets(const std::vector<Eigen::VectorXd>& vertices);

/// Extreme points of conv(points), d <= 3.
std::vector<Eigen::VectorXd> hull_vertices(const std::vector<Eigen::VectorXd>& points);

/// Exact volume of conv(vertices) in d <= 3 (area when d = 2), by fan
/// decomposition from an interior point.
double hull_volume(const std::vector<Eigen::VectorXd>& vertices);

/// Polar of a polytope with the origin in its interior (d <= 3): vertices
/// normal/offset per facet, facets {x : <v,x> <= 1} per hull vertex v.
Polytope polar_polytope(const Polytope& poly);

enum class ContainmentMode { exact_facet, sampled };

struct ContainmentReport {
    bool contained = false;
    ContainmentMode mode = ContainmentMode::exact_facet;
    double worst_margin = 0.0;          // min over checked directions of h_P(u) - h_K(u)
    Eigen::VectorXd worst_direction;
};

/// Is body inside conv(poly.vertices)? Exact facet certification for
/// d <= 3; direction sampling (never reported as proof) above.
ContainmentReport contains(const Polytope& poly, const BodySpec& body, double tol = 1e-9,
                           int n_samples = 4096);

/// Checks the vertex/facet consistency invariants of a Polytope whose
/// facets are populated. Throws std::invalid_argument on violation.
void validate(const Polytope& poly, double tol = 1e-9);

/// n reasonably well-spread unit directions; deterministic. d = 2 equal
/// angles, d = 3 Fibonacci sphere, d > 3 seeded Gaussian normalization.
std::vector<Eigen::VectorXd> spread_directions(int dim, int n);

}  // namespace vein
