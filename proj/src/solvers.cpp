#include "sparsereg/solvers.hpp"

#include "sparsereg/surrogate.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sparsereg {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kL1DivergenceGuard = 1e12;

// Shared elementwise core of the reweighted update, evaluated at the base
// point z (x for IRLS, the extrapolated y for FIRLS).
Vector reweighted_update(const Vector& z, const Vector& atb, const Vector& ataz,
                         const Vector& w, const PenaltySpec& p) {
    Vector out(z.size());
    for (Eigen::Index k = 0; k < z.size(); ++k) {
        out(k) = (z(k) + atb(k) - ataz(k)) / (1.0 + p.lambda(k) * p.q(k) * w(k));
    }
    return out;
}

void check_solver_dims(const LinearOperator& op, const Vector& b,
                       const Vector& x, const PenaltySpec& p,
                       const char* where) {
    if (x.size() != op.cols() || b.size() != op.rows() ||
        p.lambda.size() != op.cols() || p.q.size() != op.cols()) {
        throw std::invalid_argument(std::string(where) +
                                    ": dimension mismatch between operator, "
                                    "data, iterate and penalty");
    }
}

}  // namespace

const char* to_string(SolverVariant v) {
    switch (v) {
        case SolverVariant::irls: return "irls";
        case SolverVariant::firls: return "firls";
        case SolverVariant::ista: return "ista";
        case SolverVariant::fista: return "fista";
    }
    return "?";
}

SolverVariant solver_variant_from_string(const std::string& name) {
    if (name == "irls") return SolverVariant::irls;
    if (name == "firls") return SolverVariant::firls;
    if (name == "ista") return SolverVariant::ista;
    if (name == "fista") return SolverVariant::fista;
    throw std::invalid_argument("unknown solver variant: " + name);
}

Vector irls_weights(const Vector& x, double eps, const Vector& q) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("irls_weights: eps must be > 0");
    }
    if (q.size() != x.size()) {
        throw std::invalid_argument("irls_weights: q length mismatch");
    }
    const double eps2 = eps * eps;
    Vector w(x.size());
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        if (!(q(k) > 0.0) || q(k) > 2.0) {
            throw std::invalid_argument("irls_weights: q_k must lie in (0, 2]");
        }
        w(k) = 1.0 / std::pow(x(k) * x(k) + eps2, (2.0 - q(k)) / 2.0);
    }
    return w;
}

double epsilon_update(double eps_prev, double step_norm, double alpha, int n) {
    return std::min(eps_prev, std::sqrt(step_norm + std::pow(alpha, n)));
}

Vector irls_step(const LinearOperator& op, const Vector& b, const Vector& x,
                 const Vector& w, const PenaltySpec& p) {
    check_solver_dims(op, b, x, p, "irls_step");
    const Vector atb = op.apply_adjoint(b);
    const Vector atax = op.apply_adjoint(op.apply(x));
    return reweighted_update(x, atb, atax, w, p);
}

Vector ista_step(const LinearOperator& op, const Vector& b, const Vector& x,
                 double tau) {
    const Vector atb = op.apply_adjoint(b);
    const Vector atax = op.apply_adjoint(op.apply(x));
    return soft_threshold(x + atb - atax, tau);
}

std::pair<double, double> fista_momentum_coefficient(double t_n) {
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_n * t_n));
    return {t_next, (t_n - 1.0) / t_next};
}

Vector firls_step(const LinearOperator& op, const Vector& b, const Vector& y,
                  const Vector& w, const PenaltySpec& p) {
    check_solver_dims(op, b, y, p, "firls_step");
    const Vector atb = op.apply_adjoint(b);
    const Vector atay = op.apply_adjoint(op.apply(y));
    return reweighted_update(y, atb, atay, w, p);
}

SolverResult solve(const LinearOperator& op, const Vector& b,
                   const PenaltySpec& p, const SolverConfig& cfg) {
    const Eigen::Index n = op.cols();
    if (cfg.max_iters < 1) throw std::invalid_argument("solve: max_iters must be >= 1");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
        throw std::invalid_argument("solve: alpha must lie strictly inside (0, 1)");
    }
    if (!(cfg.eps_init > 0.0)) throw std::invalid_argument("solve: eps_init must be > 0");

    const bool reweighted = cfg.variant == SolverVariant::irls ||
                            cfg.variant == SolverVariant::firls;
    const bool accelerated = cfg.variant == SolverVariant::firls ||
                             cfg.variant == SolverVariant::fista;

    double tau = 0.0;
    if (!reweighted) {
        // ISTA/FISTA implement only the uniform l1 case.
        tau = p.lambda(0);
        for (Eigen::Index k = 0; k < p.lambda.size(); ++k) {
            if (p.q(k) != 1.0 || p.lambda(k) != tau) {
                throw std::invalid_argument(
                    std::string(to_string(cfg.variant)) +
                    " requires a uniform q = 1 penalty with uniform lambda");
            }
        }
    }

    Vector x = cfg.x0.value_or(Vector::Zero(n));
    check_solver_dims(op, b, x, p, "solve");
    const double step_tol =
        cfg.step_tol.value_or(1e-8 * std::sqrt(static_cast<double>(n)));
    const Vector atb = op.apply_adjoint(b);

    SolverResult result;
    result.trace.x0 = x;
    result.trace.eps0 = cfg.eps_init;

    double eps = cfg.eps_init;
    double t = 1.0;
    Vector y = x;  // extrapolated point for the accelerated variants

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        Vector x_new;
        switch (cfg.variant) {
            case SolverVariant::irls: {
                const Vector w = irls_weights(x, eps, p.q);
                x_new = reweighted_update(x, atb, op.apply_adjoint(op.apply(x)), w, p);
                break;
            }
            case SolverVariant::ista:
                x_new = soft_threshold(x + atb - op.apply_adjoint(op.apply(x)), tau);
                break;
            case SolverVariant::firls: {
                const Vector w = irls_weights(y, eps, p.q);
                x_new = reweighted_update(y, atb, op.apply_adjoint(op.apply(y)), w, p);
                break;
            }
            case SolverVariant::fista:
                x_new = soft_threshold(y + atb - op.apply_adjoint(op.apply(y)), tau);
                break;
        }

        if (!x_new.allFinite()) {
            throw DivergenceError(iter, "solve: non-finite iterate at iteration " +
                                            std::to_string(iter));
        }
        if (x_new.lpNorm<1>() > kL1DivergenceGuard) {
            throw DivergenceError(iter, "solve: iterate l1 norm exceeded guard at iteration " +
                                            std::to_string(iter));
        }

        const double step = (x_new - x).norm();
        if (accelerated) {
            const auto [t_next, coeff] = fista_momentum_coefficient(t);
            y = x_new + coeff * (x_new - x);
            t = t_next;
        }
        x = std::move(x_new);
        if (reweighted) eps = epsilon_update(eps, step, cfg.alpha, iter);

        const Vector r = op.apply(x) - b;
        result.trace.objective.push_back(r.squaredNorm() + penalty_value(x, p));
        result.trace.residual_norm.push_back(r.norm());
        result.trace.step_norm.push_back(step);
        result.trace.eps.push_back(reweighted ? eps : kNaN);
        result.trace.surrogate.push_back(
            reweighted && cfg.trace_surrogate
                ? evaluate_G_diagonal(op, b, x, eps, p)
                : kNaN);
        if (cfg.record_iterates) result.trace.iterates.push_back(x);

        result.iterations_run = iter;
        if (step <= step_tol) {
            result.termination = Termination::step_tol_reached;
            result.x_final = x;
            return result;
        }
    }
    result.termination = Termination::max_iters;
    result.x_final = x;
    return result;
}

}  // namespace sparsereg
