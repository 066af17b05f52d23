#include "sparsereg/penalty.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsereg {

void PenaltySpec::validate(Eigen::Index n) {
    if (lambda.size() != q.size()) {
        throw std::invalid_argument("PenaltySpec: lambda and q lengths differ");
    }
    if (n >= 0 && lambda.size() != n) {
        throw std::invalid_argument("PenaltySpec: expected length " +
                                    std::to_string(n) + ", got " +
                                    std::to_string(lambda.size()));
    }
    bool any_positive = false;
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        if (!(lambda(k) >= 0.0) || !std::isfinite(lambda(k))) {
            throw std::invalid_argument("PenaltySpec: lambda_k must be finite and >= 0");
        }
        any_positive = any_positive || lambda(k) > 0.0;
        if (std::abs(q(k) - 2.0) < 1e-12) q(k) = 2.0;
        if (!std::isfinite(q(k)) || q(k) > 2.0 ||
            (experimental_subunit_q ? q(k) <= 0.0 : q(k) < 1.0)) {
            throw std::invalid_argument(
                experimental_subunit_q
                    ? "PenaltySpec: q_k must lie in (0, 2]"
                    : "PenaltySpec: q_k must lie in [1, 2]");
        }
    }
    if (!any_positive) {
        throw std::invalid_argument("PenaltySpec: at least one lambda_k must be > 0");
    }
}

PenaltySpec make_penalty(Vector lambda, Vector q, bool experimental_subunit_q) {
    PenaltySpec p{std::move(lambda), std::move(q), experimental_subunit_q};
    p.validate(p.lambda.size());
    return p;
}

PenaltySpec make_uniform_penalty(Eigen::Index n, double lambda, double q,
                                 bool experimental_subunit_q) {
    return make_penalty(Vector::Constant(n, lambda), Vector::Constant(n, q),
                        experimental_subunit_q);
}

double penalty_value(const Vector& x, const PenaltySpec& p) {
    double acc = 0.0;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        acc += p.lambda(k) * std::pow(std::abs(x(k)), p.q(k));
    }
    return 2.0 * acc;
}

double evaluate_objective(const LinearOperator& op, const Vector& b,
                          const Vector& x, const PenaltySpec& p) {
    if (p.lambda.size() != x.size()) {
        throw std::invalid_argument("evaluate_objective: penalty length " +
                                    std::to_string(p.lambda.size()) +
                                    " does not match x length " +
                                    std::to_string(x.size()));
    }
    const Vector r = op.apply(x) - b;
    return r.squaredNorm() + penalty_value(x, p);
}

Vector soft_threshold(const Vector& v, double tau) {
    if (tau < 0.0) throw std::invalid_argument("soft_threshold: tau must be >= 0");
    Vector out(v.size());
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (v(k) > tau) {
            out(k) = v(k) - tau;
        } else if (v(k) < -tau) {
            out(k) = v(k) + tau;
        } else {
            out(k) = 0.0;
        }
    }
    return out;
}

double lambda_max(const LinearOperator& op, const Vector& b) {
    if (b.size() == 0) return 0.0;
    return op.apply_adjoint(b).cwiseAbs().maxCoeff();
}

KktReport kkt_residual(const LinearOperator& op, const Vector& b,
                       const Vector& x, const PenaltySpec& p,
                       double zero_tol) {
    if (!(zero_tol > 0.0)) {
        throw std::invalid_argument("kkt_residual: zero_tol must be > 0");
    }
    for (Eigen::Index k = 0; k < p.q.size(); ++k) {
        if (p.q(k) < 1.0 || p.q(k) > 2.0) {
            throw std::invalid_argument(
                "kkt_residual: optimality conditions require q_k in [1, 2]");
        }
    }
    const Vector g = op.apply_adjoint(b - op.apply(x));
    KktReport report;
    report.zero_tol = zero_tol;
    report.per_coordinate_residual.resize(x.size());
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        const double norm = std::max(p.lambda(k), 1.0);
        double res;
        if (std::abs(x(k)) > zero_tol) {
            const double sgn = x(k) > 0.0 ? 1.0 : -1.0;
            const double target =
                p.lambda(k) * sgn * p.q(k) * std::pow(std::abs(x(k)), p.q(k) - 1.0);
            res = std::abs(g(k) - target) / norm;
        } else if (p.q(k) == 1.0) {
            res = std::max(0.0, std::abs(g(k)) - p.lambda(k)) / norm;
        } else {
            res = std::abs(g(k)) / norm;
        }
        report.per_coordinate_residual(k) = res;
    }
    report.max_residual =
        x.size() > 0 ? report.per_coordinate_residual.maxCoeff() : 0.0;
    return report;
}

}  // namespace sparsereg
