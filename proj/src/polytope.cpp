#include "vein/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "vein/errors.hpp"

namespace vein {

namespace {

constexpr double kHullEps = 1e-9;

int common_dim(const std::vector<Eigen::VectorXd>& pts) {
    if (pts.empty()) throw std::invalid_argument("empty point list");
    const int d = static_cast<int>(pts.front().size());
    for (const auto& p : pts) {
        if (static_cast<int>(p.size()) != d) throw std::invalid_argument("mixed dimensions");
        if (!p.allFinite()) throw std::invalid_argument("non-finite point");
    }
    return d;
}

double scale_of(const std::vector<Eigen::VectorXd>& pts) {
    double s = 0.0;
    for (const auto& p : pts) s = std::max(s, p.cwiseAbs().maxCoeff());
    return std::max(s, 1.0);
}

// ---- 2-D hull (monotone chain), indices in CCW order ----------------------

std::vector<int> hull2_indices(const std::vector<Eigen::VectorXd>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a](0) != pts[b](0)) return pts[a](0) < pts[b](0);
        return pts[a](1) < pts[b](1);
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](int a, int b) { return (pts[a] - pts[b]).norm() < 1e-12; }),
              idx.end());
    auto cross = [&](int o, int a, int b) {
        return (pts[a](0) - pts[o](0)) * (pts[b](1) - pts[o](1)) -
               (pts[a](1) - pts[o](1)) * (pts[b](0) - pts[o](0));
    };
    const double eps = kHullEps * scale_of(pts) * scale_of(pts);
    auto chain = [&](const std::vector<int>& run) {
        std::vector<int> h;
        for (int i : run) {
            while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), i) <= eps) h.pop_back();
            h.push_back(i);
        }
        h.pop_back();  // last point opens the other chain
        return h;
    };
    std::vector<int> lower = chain(idx);
    std::reverse(idx.begin(), idx.end());
    std::vector<int> upper = chain(idx);
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw DegenerateHull("points are collinear");
    return lower;  // CCW
}

// ---- 3-D incremental hull, outward-oriented triangles ----------------------

struct Tri {
    int a, b, c;
    Eigen::Vector3d n;  // unit outward normal
    double off;
};

Tri make_tri(const std::vector<Eigen::VectorXd>& pts, int a, int b, int c,
             const Eigen::Vector3d& inside) {
    Tri t{a, b, c, {}, 0.0};
    Eigen::Vector3d pa = pts[a].head<3>(), pb = pts[b].head<3>(), pc = pts[c].head<3>();
    Eigen::Vector3d n = (pb - pa).cross(pc - pa);
    const double len = n.norm();
    if (len == 0.0) throw DegenerateHull("degenerate triangle");
    n /= len;
    double off = n.dot(pa);
    if (n.dot(inside) > off) {  // flip to outward
        std::swap(t.b, t.c);
        n = -n;
        off = -off;
    }
    t.n = n;
    t.off = off;
    return t;
}

std::vector<Tri> hull3_triangles(const std::vector<Eigen::VectorXd>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 4) throw DegenerateHull("need at least 4 points in 3-D");
    const double sc = scale_of(pts);
    const double eps = kHullEps * sc;

    // initial simplex: spread-out quadruple
    int i0 = 0;
    for (int i = 1; i < n; ++i)
        if (pts[i](0) < pts[i0](0)) i0 = i;
    int i1 = -1;
    double best = eps;
    for (int i = 0; i < n; ++i) {
        double d = (pts[i] - pts[i0]).norm();
        if (d > best) { best = d; i1 = i; }
    }
    if (i1 < 0) throw DegenerateHull("all points coincide");
    Eigen::Vector3d e0 = (pts[i1] - pts[i0]).head<3>();
    int i2 = -1;
    best = eps;
    for (int i = 0; i < n; ++i) {
        double d = e0.cross((pts[i] - pts[i0]).head<3>()).norm() / e0.norm();
        if (d > best) { best = d; i2 = i; }
    }
    if (i2 < 0) throw DegenerateHull("points are collinear");
    Eigen::Vector3d nrm = e0.cross((pts[i2] - pts[i0]).head<3>()).normalized();
    int i3 = -1;
    best = eps;
    for (int i = 0; i < n; ++i) {
        double d = std::abs(nrm.dot((pts[i] - pts[i0]).head<3>()));
        if (d > best) { best = d; i3 = i; }
    }
    if (i3 < 0) throw DegenerateHull("points are coplanar");

    Eigen::Vector3d inside =
        (pts[i0] + pts[i1] + pts[i2] + pts[i3]).head<3>() / 4.0;
    std::vector<Tri> tris;
    tris.push_back(make_tri(pts, i0, i1, i2, inside));
    tris.push_back(make_tri(pts, i0, i1, i3, inside));
    tris.push_back(make_tri(pts, i0, i2, i3, inside));
    tris.push_back(make_tri(pts, i1, i2, i3, inside));

    for (int i = 0; i < n; ++i) {
        if (i == i0 || i == i1 || i == i2 || i == i3) continue;
        const Eigen::Vector3d p = pts[i].head<3>();
        std::vector<char> visible(tris.size(), 0);
        bool any = false;
        for (size_t t = 0; t < tris.size(); ++t) {
            if (tris[t].n.dot(p) > tris[t].off + eps) { visible[t] = 1; any = true; }
        }
        if (!any) continue;

        // horizon = edges of visible triangles not shared with another visible one
        std::vector<std::pair<int, int>> horizon;
        auto edge_hidden = [&](int u, int v) {
            for (size_t t = 0; t < tris.size(); ++t) {
                if (visible[t]) continue;
                const Tri& tr = tris[t];
                int e[3][2] = {{tr.a, tr.b}, {tr.b, tr.c}, {tr.c, tr.a}};
                for (auto& ed : e)
                    if ((ed[0] == u && ed[1] == v) || (ed[0] == v && ed[1] == u)) return true;
            }
            return false;
        };
        for (size_t t = 0; t < tris.size(); ++t) {
            if (!visible[t]) continue;
            int e[3][2] = {{tris[t].a, tris[t].b}, {tris[t].b, tris[t].c}, {tris[t].c, tris[t].a}};
            for (auto& ed : e)
                if (edge_hidden(ed[0], ed[1])) horizon.emplace_back(ed[0], ed[1]);
        }
        std::vector<Tri> next;
        for (size_t t = 0; t < tris.size(); ++t)
            if (!visible[t]) next.push_back(tris[t]);
        for (auto& [u, v] : horizon) next.push_back(make_tri(pts, u, v, i, inside));
        tris = std::move(next);
    }
    return tris;
}

std::vector<Facet> dedupe_planes(const std::vector<Tri>& tris) {
    std::vector<Facet> out;
    for (const auto& t : tris) {
        bool found = false;
        for (const auto& f : out) {
            if ((f.normal.head<3>() - t.n).norm() < 1e-7 && std::abs(f.offset - t.off) < 1e-7 * std::max(1.0, std::abs(t.off))) {
                found = true;
                break;
            }
        }
        if (!found) {
            Facet f;
            f.normal = t.n;
            f.offset = t.off;
            out.push_back(std::move(f));
        }
    }
    return out;
}

}  // namespace

std::vector<Facet> hull_facets(const std::vector<Eigen::VectorXd>& vertices) {
    const int d = common_dim(vertices);
    if (d == 2) {
        auto h = hull2_indices(vertices);
        std::vector<Facet> out;
        const int m = static_cast<int>(h.size());
        for (int i = 0; i < m; ++i) {
            const Eigen::VectorXd& a = vertices[h[i]];
            const Eigen::VectorXd& b = vertices[h[(i + 1) % m]];
            Eigen::Vector2d e = (b - a).head<2>();
            Eigen::Vector2d nrm(e(1), -e(0));  // outward for CCW order
            nrm.normalize();
            Facet f;
            f.normal = nrm;
            f.offset = nrm.dot(a.head<2>());
            out.push_back(std::move(f));
        }
        return out;
    }
    if (d == 3) return dedupe_planes(hull3_triangles(vertices));
    throw std::invalid_argument("hull_facets: only d = 2, 3 supported");
}

std::vector<Eigen::VectorXd> hull_vertices(const std::vector<Eigen::VectorXd>& points) {
    const int d = common_dim(points);
    std::vector<Eigen::VectorXd> out;
    if (d == 2) {
        for (int i : hull2_indices(points)) out.push_back(points[i]);
        return out;
    }
    if (d == 3) {
        std::vector<char> on(points.size(), 0);
        for (const auto& t : hull3_triangles(points)) on[t.a] = on[t.b] = on[t.c] = 1;
        for (size_t i = 0; i < points.size(); ++i)
            if (on[i]) out.push_back(points[i]);
        return out;
    }
    throw std::invalid_argument("hull_vertices: only d = 2, 3 supported");
}

double hull_volume(const std::vector<Eigen::VectorXd>& vertices) {
    const int d = common_dim(vertices);
    if (d == 2) {
        auto h = hull2_indices(vertices);
        double a2 = 0.0;
        const int m = static_cast<int>(h.size());
        for (int i = 0; i < m; ++i) {
            const auto& p = vertices[h[i]];
            const auto& q = vertices[h[(i + 1) % m]];
            a2 += p(0) * q(1) - q(0) * p(1);
        }
        return 0.5 * std::abs(a2);
    }
    if (d == 3) {
        auto tris = hull3_triangles(vertices);
        Eigen::Vector3d inside = Eigen::Vector3d::Zero();
        for (const auto& v : vertices) inside += v.head<3>();
        inside /= static_cast<double>(vertices.size());
        double vol = 0.0;
        for (const auto& t : tris) {
            Eigen::Vector3d a = vertices[t.a].head<3>() - inside;
            Eigen::Vector3d b = vertices[t.b].head<3>() - inside;
            Eigen::Vector3d c = vertices[t.c].head<3>() - inside;
            vol += std::abs(a.dot(b.cross(c)));
        }
        return vol / 6.0;
    }
    throw std::invalid_argument("hull_volume: only d = 2, 3 supported");
}

Polytope polar_polytope(const Polytope& poly) {
    const int d = common_dim(poly.vertices);
    if (d > 3) throw std::invalid_argument("polar_polytope: only d <= 3 supported");
    std::vector<Facet> facets = poly.facets ? *poly.facets : hull_facets(poly.vertices);
    Polytope out;
    for (const auto& f : facets) {
        if (f.offset <= 1e-9)
            throw OriginNotInterior("polar_polytope: origin not interior (offset <= 1e-9)");
        out.vertices.push_back(f.normal / f.offset);
    }
    std::vector<Facet> polar_facets;
    for (const auto& v : hull_vertices(poly.vertices)) {
        Facet f;
        const double len = v.norm();
        f.normal = v / len;
        f.offset = 1.0 / len;
        polar_facets.push_back(std::move(f));
    }
    out.facets = std::move(polar_facets);
    return out;
}

std::vector<Eigen::VectorXd> spread_directions(int dim, int n) {
    std::vector<Eigen::VectorXd> dirs;
    dirs.reserve(n);
    if (dim == 2) {
        for (int k = 0; k < n; ++k) {
            double th = 2.0 * std::numbers::pi * k / n;
            dirs.push_back(Eigen::Vector2d(std::cos(th), std::sin(th)));
        }
        return dirs;
    }
    if (dim == 3) {
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < n; ++k) {
            double z = 1.0 - 2.0 * (k + 0.5) / n;
            double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            double th = golden * k;
            dirs.push_back(Eigen::Vector3d(r * std::cos(th), r * std::sin(th), z));
        }
        return dirs;
    }
    std::mt19937_64 rng(0x5eeded0f00dULL + static_cast<std::uint64_t>(dim));
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (static_cast<int>(dirs.size()) < n) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v(i) = gauss(rng);
        double len = v.norm();
        if (len > 1e-12) dirs.push_back(v / len);
    }
    return dirs;
}

ContainmentReport contains(const Polytope& poly, const BodySpec& body, double tol, int n_samples) {
    if (!(tol > 0.0)) throw std::invalid_argument("contains: tol must be > 0");
    const int d = common_dim(poly.vertices);
    if (d != body.dim) throw std::invalid_argument("contains: dimension mismatch");

    ContainmentReport rep;
    if (d <= 3) {
        std::vector<Facet> facets = poly.facets ? *poly.facets : hull_facets(poly.vertices);
        rep.mode = ContainmentMode::exact_facet;
        rep.worst_margin = kInfinity;
        for (const auto& f : facets) {
            double margin = f.offset - support(body, f.normal);
            if (margin < rep.worst_margin) {
                rep.worst_margin = margin;
                rep.worst_direction = f.normal;
            }
        }
        rep.contained = rep.worst_margin >= -tol;
        return rep;
    }

    rep.mode = ContainmentMode::sampled;
    std::vector<Eigen::VectorXd> dirs = spread_directions(d, n_samples);
    if (body.kind == BodyKind::sym_polytope) {
        for (int j = 0; j < body.generators.cols(); ++j) {
            Eigen::VectorXd g = body.generators.col(j);
            if (g.norm() > 1e-12) dirs.push_back(g.normalized());
        }
    }
    rep.worst_margin = kInfinity;
    for (const auto& u : dirs) {
        for (double sign : {1.0, -1.0}) {
            Eigen::VectorXd v = sign * u;
            double hp = -kInfinity;
            for (const auto& pt : poly.vertices) hp = std::max(hp, v.dot(pt));
            double margin = hp - support(body, v);
            if (margin < rep.worst_margin) {
                rep.worst_margin = margin;
                rep.worst_direction = v;
            }
        }
    }
    rep.contained = rep.worst_margin >= -tol;
    return rep;
}

void validate(const Polytope& poly, double tol) {
    common_dim(poly.vertices);
    if (!poly.facets) return;
    const int d = static_cast<int>(poly.vertices.front().size());
    for (const auto& f : poly.facets.value()) {
        if (std::abs(f.normal.norm() - 1.0) > tol)
            throw std::invalid_argument("facet normal not unit length");
        int supporting = 0;
        for (const auto& v : poly.vertices) {
            double slack = f.offset - f.normal.dot(v);
            if (slack < -tol) throw std::invalid_argument("vertex outside facet halfspace");
            if (std::abs(slack) <= tol) ++supporting;
        }
        if (supporting < d) throw std::invalid_argument("facet not supporting (fewer than d touching vertices)");
    }
}

}  // namespace vein
