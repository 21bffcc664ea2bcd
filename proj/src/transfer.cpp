#include "vein/transfer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "vein/errors.hpp"
#include "vein/mvee.hpp"
#include "vein/polytope.hpp"

namespace vein {

double transfer_bound(double vein_upper_l, double distance) {
    if (!(vein_upper_l > 0.0) || !(distance > 0.0))
        throw std::invalid_argument("transfer_bound: positive arguments required");
    return vein_upper_l * distance;
}

Eigen::MatrixXi sylvester_hadamard(int m) {
    if (m < 0 || m > 6) throw std::invalid_argument("sylvester_hadamard: 0 <= m <= 6");
    Eigen::MatrixXi h(1, 1);
    h(0, 0) = 1;
    for (int k = 0; k < m; ++k) {
        Eigen::MatrixXi next(2 * h.rows(), 2 * h.cols());
        next << h, h, h, -h;
        h = std::move(next);
    }
    return h;
}

DistanceWitness hadamard_witness(int m) {
    if (m < 1 || m > 6) throw std::invalid_argument("hadamard_witness: 1 <= m <= 6");
    const int d = 1 << m;
    const Eigen::MatrixXi h = sylvester_hadamard(m);

    // H'H = d Id, exact in integers; this is what makes the reverse
    // containment an identity rather than an estimate.
    const Eigen::MatrixXi gram = h.transpose() * h;
    if (gram != d * Eigen::MatrixXi::Identity(d, d))
        throw InequalityViolated("hadamard_witness: H'H != d Id");

    // H B_1 inside B_inf: every column has sup-norm 1.
    for (int j = 0; j < d; ++j) {
        if (h.col(j).cwiseAbs().maxCoeff() != 1)
            throw InequalityViolated("hadamard_witness: column leaves the cube");
    }

    // B_inf inside sqrt(d) H B_1: for a sign vector x the coefficient vector
    // is H'x / d, and ||H'x||_1^2 <= d^3 certifies the sqrt(d) scale.
    const long long cube = static_cast<long long>(d) * d * d;
    auto check_sign_vector = [&](const Eigen::VectorXi& x) {
        const Eigen::VectorXi coeff = h.transpose() * x;
        const long long s = coeff.cwiseAbs().cast<long long>().sum();
        return s * s <= cube;
    };

    DistanceWitness w;
    w.op = h.cast<double>();
    w.ratio = std::sqrt(static_cast<double>(d));
    if (d <= 16) {
        w.exhaustive = true;
        Eigen::VectorXi x(d);
        for (std::uint64_t bits = 0; bits < (1ULL << d); ++bits) {
            for (int i = 0; i < d; ++i) x(i) = (bits >> i & 1) ? 1 : -1;
            if (!check_sign_vector(x))
                throw InequalityViolated("hadamard_witness: sign vector escapes");
        }
    } else {
        w.exhaustive = false;
        std::mt19937_64 rng(0xhadULL);
        Eigen::VectorXi x(d);
        for (int trial = 0; trial < 10000; ++trial) {
            for (int i = 0; i < d; ++i) x(i) = (rng() & 1) ? 1 : -1;
            if (!check_sign_vector(x))
                throw InequalityViolated("hadamard_witness: sign vector escapes");
        }
    }
    return w;
}

double dist_to_ball_upper(const BodySpec& body) {
    switch (body.kind) {
        case BodyKind::lp_ball:
            if (body.p == kInfinity) return std::sqrt(static_cast<double>(body.dim));
            return std::pow(static_cast<double>(body.dim), std::abs(1.0 / body.p - 0.5));
        case BodyKind::ellipsoid:
            return 1.0;
        case BodyKind::sym_polytope: {
            if (body.dim > 3)
                throw std::invalid_argument("dist_to_ball_upper: certified mode needs d <= 3");
            MveeResult mv = mvee_of_body(body, 1e-9);
            // inflate so K is inside E without qualification
            Eigen::MatrixXd a = mv.shape.matrix * (1.0 + mv.duality_gap + 1e-12);
            // E inside lambda K iff sup over polar vertices w of sqrt(w' A w)
            // is at most lambda; polar vertices come from the hull facets.
            std::vector<Eigen::VectorXd> pts;
            for (int j = 0; j < body.generators.cols(); ++j) {
                pts.push_back(body.generators.col(j));
                pts.push_back(-body.generators.col(j));
            }
            double lambda = 0.0;
            for (const auto& f : hull_facets(pts)) {
                Eigen::VectorXd w = f.normal / f.offset;
                lambda = std::max(lambda, std::sqrt(w.dot(a * w)));
            }
            return lambda;
        }
    }
    throw std::logic_error("unreachable");
}

VeinBoundPair planar_vein_bound(const BodySpec& body) {
    if (body.dim != 2) throw std::invalid_argument("planar_vein_bound: d must be 2");
    const double lambda = dist_to_ball_upper(body);
    const double ball = 4.0 * std::sqrt(2.0);

    VeinBoundPair pair;
    pair.lower.kind = CertKind::transfer;
    pair.lower.side = CertSide::lower;
    pair.lower.value = std::max(ball / lambda, 4.0);  // distance never exceeds sqrt(2)
    pair.lower.witness = {{"ball_value", ball}, {"distance_upper", lambda}};
    pair.lower.checked = lambda >= 1.0 - 1e-9 && pair.lower.value * lambda >= ball - 1e-9;

    pair.upper.kind = CertKind::transfer;
    pair.upper.side = CertSide::upper;
    pair.upper.value = 6.0;  // parallelogram distance 3/2 times the square's 4
    pair.upper.witness = {{"parallelogram_value", 4.0}, {"distance_bound", 1.5}};
    pair.upper.checked = false;  // cited planar theorem; the search realizes it
    return pair;
}

VeinBoundPair spatial_vein_bound(const BodySpec& body) {
    if (body.dim != 3) throw std::invalid_argument("spatial_vein_bound: d must be 3");
    const double lambda = dist_to_ball_upper(body);
    const double ball = 6.0 * std::sqrt(3.0);

    VeinBoundPair pair;
    pair.lower.kind = CertKind::transfer;
    pair.lower.side = CertSide::lower;
    pair.lower.value = std::max(ball / lambda, 6.0);  // distance never exceeds sqrt(3)
    pair.lower.witness = {{"ball_value", ball}, {"distance_upper", lambda}};
    pair.lower.checked = lambda >= 1.0 - 1e-9 && pair.lower.value * lambda >= ball - 1e-9;

    pair.upper.kind = CertKind::transfer;
    pair.upper.side = CertSide::upper;
    pair.upper.value = transfer_bound(ball, lambda);
    pair.upper.witness = {{"ball_value", ball}, {"distance_upper", lambda}};
    pair.upper.checked = true;
    return pair;
}

}  // namespace vein
