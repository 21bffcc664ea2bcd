#include "vein/lower_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vein/errors.hpp"
#include "vein/mvee.hpp"
#include "vein/polytope.hpp"

namespace vein {

using std::numbers::pi;

std::string to_string(CertKind k) {
    switch (k) {
        case CertKind::jensen2d: return "jensen2d";
        case CertKind::simplex: return "simplex";
        case CertKind::cap_area: return "cap_area";
        case CertKind::spherical_case_c: return "spherical_case_c";
        case CertKind::octahedron_coordinate: return "octahedron_coordinate";
        case CertKind::ovr_ball_pajor: return "ovr_ball_pajor";
        case CertKind::transfer: return "transfer";
    }
    return "?";
}

std::string to_string(CertSide s) { return s == CertSide::lower ? "lower" : "upper"; }

double planar_polygon_bound(int n) {
    if (n < 3) throw std::invalid_argument("planar_polygon_bound: n >= 3");
    return n / std::cos(pi / n);
}

double simplex_bound(int d) {
    if (d < 2) throw std::invalid_argument("simplex_bound: d >= 2");
    return static_cast<double>(d) * (d + 1);
}

double cap_area_bound(int n) {
    if (n < 3) throw std::invalid_argument("cap_area_bound: n >= 3");
    return static_cast<double>(n) * n / (n - 2);
}

double regular_polygon_vertex_norm(double area, double sides) {
    if (!(area > 0.0 && area < 2.0 * pi)) throw std::invalid_argument("area must lie in (0, 2 pi)");
    if (!(sides >= 3.0)) throw std::invalid_argument("sides must be >= 3");
    return std::tan(pi / sides) * std::tan((area + (sides - 2.0) * pi) / (2.0 * sides));
}

double vertex_sum_bound(int m, int n) {
    if (n < 5 || n > 7) throw std::invalid_argument("vertex_sum_bound: 5 <= n <= 7");
    if (m < 0 || m >= n - 1) throw std::invalid_argument("vertex_sum_bound: 0 <= m < n-1");
    const double rem = static_cast<double>(n - m);
    const double area = (4.0 * pi - kSmallFaceAreaCut * m) / rem;
    const double sides = ((6.0 * n - 12.0) - 3.0 * m) / rem;
    return m + rem * regular_polygon_vertex_norm(area, sides);
}

double five_vertex_bound(double a) {
    if (!(a >= 0.0 && a <= kLargeFaceAreaCap))
        throw std::invalid_argument("five_vertex_bound: a in [0, 5.5]");
    return 2.0 * std::sqrt(3.0) * std::tan((a + pi) / 6.0) + 3.0 * std::tan((5.0 * pi - a) / 12.0);
}

double five_vertex_bound_min() {
    // grid scan guards against local minima, golden section refines
    const int grid = 1000;
    double best_a = 0.0, best = five_vertex_bound(0.0);
    for (int i = 1; i <= grid; ++i) {
        const double a = kLargeFaceAreaCap * i / grid;
        const double v = five_vertex_bound(a);
        if (v < best) { best = v; best_a = a; }
    }
    double lo = std::max(0.0, best_a - kLargeFaceAreaCap / grid);
    double hi = std::min(kLargeFaceAreaCap, best_a + kLargeFaceAreaCap / grid);
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    while (hi - lo > 1e-10) {
        const double c = hi - gr * (hi - lo);
        const double d = lo + gr * (hi - lo);
        if (five_vertex_bound(c) < five_vertex_bound(d)) hi = d;
        else lo = c;
    }
    return five_vertex_bound(0.5 * (lo + hi));
}

namespace {

void worse(LemmaCheckItem& item, double value, double x, double y, double floor) {
    if (value < item.worst_value) {
        item.worst_value = value;
        item.worst_x = x;
        item.worst_y = y;
    }
    if (value < floor) item.pass = false;
}

}  // namespace

LemmaCheckReport lemma_func_checks(double grid_step, std::function<double(double, double)> fn) {
    if (!(grid_step > 0.0 && grid_step <= 0.1))
        throw std::invalid_argument("lemma_func_checks: grid_step in (0, 0.1]");
    if (!fn) fn = [](double x, double y) { return regular_polygon_vertex_norm(x, y); };
    const double h = grid_step;

    LemmaCheckReport rep;
    rep.decreasing_in_sides.worst_value = kInfinity;
    rep.increasing_in_area.worst_value = kInfinity;
    rep.convex_in_area.worst_value = kInfinity;
    rep.jointly_convex.worst_value = kInfinity;

    // (i) f(x0, .) decreasing on [3, 30] for x0 in {0.5, 1.0, ..., 6.0}
    for (double x0 = 0.5; x0 <= 6.0 + 1e-12; x0 += 0.5) {
        for (double y = 3.0 + h; y <= 30.0 - h; y += h) {
            const double df = (fn(x0, y + h) - fn(x0, y - h)) / (2.0 * h);
            worse(rep.decreasing_in_sides, -df, x0, y, 0.0);  // require df < 0
        }
    }
    // (ii)+(iii) slices y0: increasing and convex in x on (0, 2 pi)
    const double xmax = 2.0 * pi - 2.0 * h;
    for (double y0 : {3.0, 3.5, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 15.0, 30.0}) {
        for (double x = 2.0 * h; x <= xmax; x += h) {
            const double fm = fn(x - h, y0);
            const double f0 = fn(x, y0);
            const double fp = fn(x + h, y0);
            worse(rep.increasing_in_area, (fp - fm) / (2.0 * h), x, y0, 0.0);
            worse(rep.convex_in_area, (fp - 2.0 * f0 + fm) / (h * h), x, y0, -1e-8);
        }
    }
    // (iv) 2x2 finite-difference Hessian PSD on [0.4, 5.5] x [3, 9]
    for (double x = kSmallFaceAreaCut + h; x <= kLargeFaceAreaCap - h + 1e-12; x += h) {
        for (double y = 3.0 + h; y <= 9.0 - h + 1e-12; y += h) {
            const double f0 = fn(x, y);
            const double fxx = (fn(x + h, y) - 2.0 * f0 + fn(x - h, y)) / (h * h);
            const double fyy = (fn(x, y + h) - 2.0 * f0 + fn(x, y - h)) / (h * h);
            const double fxy = (fn(x + h, y + h) - fn(x + h, y - h) - fn(x - h, y + h) +
                                fn(x - h, y - h)) /
                               (4.0 * h * h);
            const double tr = fxx + fyy;
            const double disc = std::sqrt((fxx - fyy) * (fxx - fyy) + 4.0 * fxy * fxy);
            worse(rep.jointly_convex, 0.5 * (tr - disc), x, y, -1e-6);
        }
    }
    return rep;
}

BoundCertificate octahedron_certificate(const std::vector<Eigen::VectorXd>& points,
                                        bool assume_containment, double tol) {
    if (points.empty()) throw std::invalid_argument("octahedron_certificate: no points");
    const int d = static_cast<int>(points.front().size());
    if (!assume_containment) {
        if (d > 3)
            throw ContainmentUnverified(
                "octahedron_certificate: d > 3 needs caller-asserted containment");
        Polytope poly{points, std::nullopt};
        auto rep = contains(poly, BodySpec::lp_ball(1.0, d), tol);
        if (!rep.contained)
            throw std::invalid_argument("octahedron_certificate: hull does not contain B_1^d");
    }

    double norm1_sum = 0.0;
    double range_sum = 0.0;
    for (const auto& p : points) norm1_sum += p.cwiseAbs().sum();
    for (int k = 0; k < d; ++k) {
        double lo = kInfinity, hi = -kInfinity;
        for (const auto& p : points) {
            lo = std::min(lo, p(k));
            hi = std::max(hi, p(k));
        }
        range_sum += hi - lo;
    }
    const double two_d = 2.0 * d;
    if (norm1_sum < range_sum - 1e-9 * std::max(1.0, range_sum))
        throw InequalityViolated("octahedron_certificate: norm sum below coordinate ranges");
    if (range_sum < two_d - tol)
        throw InequalityViolated("octahedron_certificate: coordinate ranges below 2d");

    BoundCertificate cert;
    cert.kind = CertKind::octahedron_coordinate;
    cert.side = CertSide::lower;
    cert.value = two_d;
    cert.witness = {{"norm1_sum", norm1_sum}, {"range_sum", range_sum},
                    {"n_points", points.size()}, {"dim", d}};
    cert.checked = true;
    return cert;
}

BallPajorReport ball_pajor_check(const std::vector<Eigen::VectorXd>& points) {
    if (points.empty()) throw std::invalid_argument("ball_pajor_check: no points");
    const int d = static_cast<int>(points.front().size());
    if (d != 2 && d != 3) throw std::invalid_argument("ball_pajor_check: d must be 2 or 3");

    std::vector<Eigen::VectorXd> sym;
    for (const auto& p : points) {
        sym.push_back(p);
        sym.push_back(-p);
    }
    BallPajorReport rep;
    try {
        rep.hull_volume = hull_volume(sym);
        Polytope hull{sym, std::nullopt};
        Polytope polar = polar_polytope(hull);
        rep.polar_volume = hull_volume(polar.vertices);
    } catch (const DegenerateHull&) {
        throw RankDeficient("ball_pajor_check: points do not span the space");
    }
    for (const auto& p : points) rep.norm_sum += p.norm();
    rep.volume_lower_bound = std::pow(d / rep.norm_sum, d);
    rep.santalo_product = rep.hull_volume * rep.polar_volume;
    const double bv = ball_volume(d);
    rep.santalo_cap = bv * bv;
    rep.volume_ok = rep.polar_volume >= rep.volume_lower_bound * (1.0 - 1e-9);
    rep.santalo_ok = rep.santalo_product <= rep.santalo_cap * (1.0 + 1e-9);
    return rep;
}

BoundCertificate ovr_lower_bound(int d, double ovr_value) {
    if (d < 2) throw std::invalid_argument("ovr_lower_bound: d >= 2");
    if (!(ovr_value >= 1.0 - 1e-9)) throw std::invalid_argument("ovr_lower_bound: ovr >= 1");
    const double volume_form = d / (std::pow(ball_volume(d), 1.0 / d) * ovr_value);
    const double simplified =
        std::pow(static_cast<double>(d), 1.5) / (std::sqrt(2.0 * pi * std::numbers::e) * ovr_value);
    BoundCertificate cert;
    cert.kind = CertKind::ovr_ball_pajor;
    cert.side = CertSide::lower;
    cert.value = std::max(volume_form, simplified);
    cert.witness = {{"volume_form", volume_form}, {"simplified", simplified},
                    {"ovr", ovr_value}, {"dim", d}};
    // volume form dominates exactly when vol(B_2^d) <= (2 pi e / d)^{d/2}
    cert.checked = ball_volume(d) <= std::pow(2.0 * pi * std::numbers::e / d, d / 2.0) * (1.0 + 1e-12);
    return cert;
}

double SphericalCap::area() const { return 2.0 * pi * (1.0 - std::cos(radius)); }

SphericalCap cap_from_vertex(const Eigen::Vector3d& p) {
    const double n = p.norm();
    if (!(n > 1.0)) throw std::invalid_argument("cap_from_vertex: |p| must exceed 1");
    SphericalCap cap;
    cap.center = p / n;
    cap.radius = std::acos(1.0 / n);
    return cap;
}

CoveringReport cap_covering_check(const std::vector<SphericalCap>& caps, int n_samples) {
    if (n_samples < 1000) throw std::invalid_argument("cap_covering_check: n_samples >= 1000");
    CoveringReport rep;
    rep.covered = true;
    rep.worst_deficit = -kInfinity;
    for (const auto& q : spread_directions(3, n_samples)) {
        double deficit = kInfinity;
        for (const auto& cap : caps)
            deficit = std::min(deficit, std::cos(cap.radius) - cap.center.dot(q.head<3>()));
        if (deficit > rep.worst_deficit) {
            rep.worst_deficit = deficit;
            rep.worst_point = q.head<3>();
        }
    }
    rep.covered = rep.worst_deficit <= 1e-12;
    return rep;
}

bool euler_edge_bound(const std::vector<int>& face_side_counts) {
    const int n = static_cast<int>(face_side_counts.size());
    if (n < 4) throw std::invalid_argument("euler_edge_bound: need n >= 4 faces");
    long long total = 0;
    for (int s : face_side_counts) {
        if (s < 3) throw std::invalid_argument("euler_edge_bound: faces have >= 3 sides");
        total += s;
    }
    return total <= 6LL * n - 12;
}

BoundCertificate euclidean_ball_lower_bound(int d) {
    BoundCertificate cert;
    cert.side = CertSide::lower;
    if (d == 2) {
        // n / cos(pi/n) is minimal at n = 4 among n >= 3
        double best = kInfinity;
        int best_n = 0;
        for (int n = 3; n <= 64; ++n) {
            const double v = planar_polygon_bound(n);
            if (v < best) { best = v; best_n = n; }
        }
        cert.kind = CertKind::jensen2d;
        cert.value = best;
        cert.witness = {{"attained_at_n", best_n}};
        cert.checked = std::abs(best - 4.0 * std::sqrt(2.0)) < 1e-12;
        return cert;
    }
    if (d == 3) {
        // minimum over the exhaustive case analysis for n-vertex polyhedra
        const double four_vertices = simplex_bound(3);
        double many_vertices = kInfinity;  // n >= 8
        for (int n = 8; n <= 4096; ++n) many_vertices = std::min(many_vertices, cap_area_bound(n));
        double few_vertices = five_vertex_bound_min();  // n = 5 route
        nlohmann::json table = nlohmann::json::array();
        for (int n = 6; n <= 7; ++n) {
            for (int m = 0; m < n - 1; ++m) {
                const double v = vertex_sum_bound(m, n);
                table.push_back({{"m", m}, {"n", n}, {"value", v}});
                few_vertices = std::min(few_vertices, v);
            }
        }
        cert.kind = CertKind::spherical_case_c;
        cert.value = std::min({four_vertices, many_vertices, few_vertices});
        cert.witness = {{"simplex", four_vertices},
                        {"cap_area_min", many_vertices},
                        {"five_vertex_min", five_vertex_bound_min()},
                        {"mixed_face_table", table}};
        cert.checked = std::abs(cert.value - 6.0 * std::sqrt(3.0)) < 1e-9;
        return cert;
    }
    throw std::invalid_argument("euclidean_ball_lower_bound: only d = 2, 3");
}

}  // namespace vein
