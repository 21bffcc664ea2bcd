#include "vein/mvee.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "vein/errors.hpp"
#include "vein/polytope.hpp"

namespace vein {

double ball_volume(int d) {
    if (d < 1) throw std::invalid_argument("ball_volume: d >= 1");
    return std::pow(std::numbers::pi, d / 2.0) / std::tgamma(1.0 + d / 2.0);
}

double ellipsoid_volume(const EllipsoidShape& e) {
    const int d = static_cast<int>(e.matrix.rows());
    return ball_volume(d) * std::sqrt(e.matrix.determinant());
}

MveeResult mvee_of_points(const std::vector<Eigen::VectorXd>& points, double eps, int max_iters) {
    if (points.empty()) throw std::invalid_argument("mvee: empty point set");
    if (!(eps > 0.0)) throw std::invalid_argument("mvee: eps must be > 0");
    const int d = static_cast<int>(points.front().size());
    const int m = static_cast<int>(points.size());
    Eigen::MatrixXd X(d, m);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(points[i].size()) != d) throw std::invalid_argument("mvee: mixed dims");
        X.col(i) = points[i];
    }

    // Maximize log det sum_i u_i x_i x_i' over the weight simplex; the
    // symmetric MVEE is then {x : x' (d M)^-1 x <= 1}. Outer products of
    // +-x coincide, so the given points stand in for the symmetrized set.
    Eigen::VectorXd u = Eigen::VectorXd::Constant(m, 1.0 / m);
    Eigen::MatrixXd M(d, d);
    Eigen::VectorXd kappa(m);
    int iter = 0;
    double gap = 0.0;
    for (; iter < max_iters; ++iter) {
        M = X * u.asDiagonal() * X.transpose();
        Eigen::LLT<Eigen::MatrixXd> llt(M);
        if (llt.info() != Eigen::Success)
            throw RankDeficient("mvee: points do not span the space");
        Eigen::MatrixXd S = llt.solve(X);
        for (int i = 0; i < m; ++i) kappa(i) = X.col(i).dot(S.col(i));

        int iplus = 0, iminus = -1;
        kappa.maxCoeff(&iplus);
        double kmin = kInfinity;
        for (int i = 0; i < m; ++i) {
            if (u(i) > 1e-14 && kappa(i) < kmin) {
                kmin = kappa(i);
                iminus = i;
            }
        }
        const double eps_plus = kappa(iplus) / d - 1.0;
        const double eps_minus = (iminus >= 0) ? 1.0 - kmin / d : 0.0;
        gap = eps_plus;
        if (std::max(eps_plus, eps_minus) <= eps) break;

        int j;
        double beta;
        if (eps_plus >= eps_minus) {
            j = iplus;
            const double k = kappa(j);
            beta = (k - d) / (d * (k - 1.0));
        } else {
            j = iminus;
            const double k = kappa(j);
            const double drop = -u(j) / (1.0 - u(j));
            beta = (k > 1.0 + 1e-12) ? std::max((k - d) / (d * (k - 1.0)), drop) : drop;
        }
        u *= (1.0 - beta);
        u(j) += beta;
        u = u.cwiseMax(0.0);
        u /= u.sum();
    }

    MveeResult res;
    res.shape.matrix = static_cast<double>(d) * (X * u.asDiagonal() * X.transpose());
    res.iterations = iter;
    res.duality_gap = std::max(gap, 0.0);
    return res;
}

MveeResult mvee_of_body(const BodySpec& body, double eps) {
    MveeResult res;
    switch (body.kind) {
        case BodyKind::lp_ball: {
            // p <= 2: the unit ball itself; p >= 2: the sign vectors
            // +-{+-1}^d / d^{1/p} are extremal, giving radius d^{1/2-1/p}.
            double r = (body.p <= 2.0) ? 1.0
                       : (body.p == kInfinity ? std::sqrt(static_cast<double>(body.dim))
                                              : std::pow(static_cast<double>(body.dim), 0.5 - 1.0 / body.p));
            res.shape.matrix = (r * r) * Eigen::MatrixXd::Identity(body.dim, body.dim);
            return res;
        }
        case BodyKind::ellipsoid:
            res.shape.matrix = body.matrix;
            return res;
        case BodyKind::sym_polytope: {
            std::vector<Eigen::VectorXd> pts;
            for (int j = 0; j < body.generators.cols(); ++j) pts.push_back(body.generators.col(j));
            return mvee_of_points(pts, eps);
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

double lp_ball_volume(int d, double p) {
    if (p == kInfinity) return std::pow(2.0, d);
    return std::pow(2.0 * std::tgamma(1.0 + 1.0 / p), d) / std::tgamma(1.0 + d / p);
}

VolumeEstimate polytope_volume_mc(const BodySpec& body, std::uint64_t samples,
                                  std::uint64_t seed) {
    const MveeResult mv = mvee_of_body(body);
    // inflate so the sampling region surely covers the body
    Eigen::MatrixXd A = mv.shape.matrix * (1.0 + mv.duality_gap + 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    Eigen::MatrixXd half = es.operatorSqrt();
    const int d = body.dim;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uint64_t hits = 0;
    Eigen::VectorXd g(d);
    for (std::uint64_t s = 0; s < samples; ++s) {
        for (int i = 0; i < d; ++i) g(i) = gauss(rng);
        g *= std::pow(unif(rng), 1.0 / d) / g.norm();  // uniform in the unit ball
        if (gauge(body, half * g) <= 1.0) ++hits;
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    if (hits == 0) throw MonteCarloUnreliable("volume: no hits");
    const double vol_e = ball_volume(d) * std::sqrt(A.determinant());
    VolumeEstimate out;
    out.value = frac * vol_e;
    out.std_error = vol_e * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    out.exact = false;
    if (out.std_error / out.value > 0.05)
        throw MonteCarloUnreliable("volume: relative standard error above 5%");
    return out;
}

}  // namespace

VolumeEstimate body_volume(const BodySpec& body, std::uint64_t mc_samples, std::uint64_t mc_seed) {
    VolumeEstimate out;
    switch (body.kind) {
        case BodyKind::lp_ball:
            out.value = lp_ball_volume(body.dim, body.p);
            return out;
        case BodyKind::ellipsoid:
            out.value = ball_volume(body.dim) * std::sqrt(body.matrix.determinant());
            return out;
        case BodyKind::sym_polytope: {
            if (body.dim <= 3) {
                std::vector<Eigen::VectorXd> pts;
                for (int j = 0; j < body.generators.cols(); ++j) {
                    pts.push_back(body.generators.col(j));
                    pts.push_back(-body.generators.col(j));
                }
                out.value = hull_volume(pts);
                return out;
            }
            return polytope_volume_mc(body, mc_samples, mc_seed);
        }
    }
    throw std::logic_error("unreachable");
}

double ovr(const BodySpec& body) {
    if (body.kind == BodyKind::ellipsoid) return 1.0;  // its own MVEE
    const MveeResult mv = mvee_of_body(body);
    const double vol_e = ellipsoid_volume(mv.shape);
    const double vol_k = body_volume(body).value;
    return std::pow(vol_e / vol_k, 1.0 / body.dim);
}

}  // namespace vein
