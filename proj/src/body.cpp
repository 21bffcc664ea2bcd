#include "vein/body.hpp"

#include <cmath>
#include <stdexcept>

#include "vein/errors.hpp"
#include "vein/lp.hpp"

namespace vein {

namespace {

void require_finite(const Eigen::VectorXd& x, const char* what) {
    if (!x.allFinite()) throw std::invalid_argument(std::string(what) + ": non-finite input");
}

void check_dim(const BodySpec& body, const Eigen::VectorXd& x) {
    if (static_cast<int>(x.size()) != body.dim)
        throw std::invalid_argument("vector dimension does not match body");
}

}  // namespace

BodySpec BodySpec::lp_ball(double p, int dim) {
    if (dim < 2) throw std::invalid_argument("lp_ball: dim must be >= 2");
    if (!(p >= 1.0)) throw std::invalid_argument("lp_ball: p must lie in [1, inf]");
    BodySpec b;
    b.kind = BodyKind::lp_ball;
    b.dim = dim;
    b.p = p;
    return b;
}

BodySpec BodySpec::ellipsoid(const Eigen::MatrixXd& shape) {
    const int d = static_cast<int>(shape.rows());
    if (d < 2 || shape.cols() != d) throw std::invalid_argument("ellipsoid: shape must be square, d >= 2");
    if (!shape.allFinite() || !shape.isApprox(shape.transpose(), 1e-12))
        throw std::invalid_argument("ellipsoid: shape must be symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(shape);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("ellipsoid: shape must be positive definite");
    BodySpec b;
    b.kind = BodyKind::ellipsoid;
    b.dim = d;
    b.matrix = shape;
    return b;
}

BodySpec BodySpec::sym_polytope(const Eigen::MatrixXd& generators) {
    const int d = static_cast<int>(generators.rows());
    if (d < 2) throw std::invalid_argument("sym_polytope: dim must be >= 2");
    if (generators.cols() < 1) throw std::invalid_argument("sym_polytope: need at least one generator");
    if (!generators.allFinite()) throw std::invalid_argument("sym_polytope: non-finite generator");
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(generators);
    qr.setThreshold(1e-10);
    if (qr.rank() < d)
        throw RankDeficient("sym_polytope: generators do not span the space (empty interior)");
    BodySpec b;
    b.kind = BodyKind::sym_polytope;
    b.dim = d;
    b.generators = generators;
    return b;
}

double dual_exponent(double p) {
    if (p == 1.0) return kInfinity;
    if (p == kInfinity) return 1.0;
    return p / (p - 1.0);
}

double lp_norm(const Eigen::VectorXd& x, double p) {
    if (p == kInfinity) return x.cwiseAbs().maxCoeff();
    if (p == 1.0) return x.cwiseAbs().sum();
    if (p == 2.0) return x.norm();
    double s = 0.0;
    for (int i = 0; i < x.size(); ++i) s += std::pow(std::abs(x(i)), p);
    return std::pow(s, 1.0 / p);
}

namespace {

// min sum |lambda_i|  s.t.  V lambda = x, split as lambda = a - b with
// a, b >= 0 so the simplex sees 2N nonnegative variables.
double polytope_gauge_lp(const Eigen::MatrixXd& V, const Eigen::VectorXd& x) {
    const int d = static_cast<int>(V.rows());
    const int n = static_cast<int>(V.cols());
    Eigen::MatrixXd A(d, 2 * n);
    A.leftCols(n) = V;
    A.rightCols(n) = -V;
    Eigen::VectorXd c = Eigen::VectorXd::Ones(2 * n);
    lp::Solution sol = lp::solve_equality_form(A, x, c);
    if (sol.status != lp::Status::optimal)
        throw Error("polytope gauge: LP did not solve (generators should span)");
    return sol.value;
}

}  // namespace

double gauge(const BodySpec& body, const Eigen::VectorXd& x) {
    require_finite(x, "gauge");
    check_dim(body, x);
    if (x.isZero(0.0)) return 0.0;
    switch (body.kind) {
        case BodyKind::lp_ball:
            return lp_norm(x, body.p);
        case BodyKind::ellipsoid: {
            Eigen::LLT<Eigen::MatrixXd> llt(body.matrix);
            return std::sqrt(x.dot(llt.solve(x)));
        }
        case BodyKind::sym_polytope:
            return polytope_gauge_lp(body.generators, x);
    }
    throw std::logic_error("unreachable");
}

double support(const BodySpec& body, const Eigen::VectorXd& u) {
    require_finite(u, "support");
    check_dim(body, u);
    switch (body.kind) {
        case BodyKind::lp_ball:
            return lp_norm(u, dual_exponent(body.p));
        case BodyKind::ellipsoid:
            return std::sqrt(u.dot(body.matrix * u));
        case BodyKind::sym_polytope:
            return (body.generators.transpose() * u).cwiseAbs().maxCoeff();
    }
    throw std::logic_error("unreachable");
}

double vein_objective(const BodySpec& body, const std::vector<Eigen::VectorXd>& points) {
    double s = 0.0;
    for (const auto& pt : points) s += gauge(body, pt);
    return s;
}

}  // namespace vein
