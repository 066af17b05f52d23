#include "sparsereg/surrogate.hpp"

#include "sparsereg/solvers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sparsereg {

double evaluate_G(const LinearOperator& op, const Vector& b, const Vector& x,
                  const Vector& a, const Vector& w, double eps,
                  const PenaltySpec& p) {
    const Eigen::Index n = x.size();
    if (a.size() != n || w.size() != n || p.lambda.size() != n) {
        throw std::invalid_argument("evaluate_G: inconsistent dimensions");
    }
    if (!(eps > 0.0)) throw std::invalid_argument("evaluate_G: eps must be > 0");

    const double eps2 = eps * eps;
    double quad = (op.apply(x) - b).squaredNorm() -
                  op.apply(x - a).squaredNorm() + (x - a).squaredNorm();
    double pen = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double xk2 = x(k) * x(k) + eps2;
        if (p.q_is_two(k)) {
            pen += 2.0 * p.lambda(k) * xk2 * (w(k) * w(k) - 2.0 * w(k) + 2.0);
        } else {
            if (!(w(k) > 0.0)) {
                throw std::invalid_argument(
                    "evaluate_G: w_k must be > 0 when q_k < 2");
            }
            const double qk = p.q(k);
            pen += p.lambda(k) * (qk * w(k) * xk2 +
                                  (2.0 - qk) * std::pow(w(k), qk / (qk - 2.0)));
        }
    }
    return quad + pen;
}

double evaluate_G_diagonal(const LinearOperator& op, const Vector& b,
                           const Vector& x, double eps, const PenaltySpec& p) {
    if (!(eps > 0.0)) {
        throw std::invalid_argument("evaluate_G_diagonal: eps must be > 0");
    }
    const double eps2 = eps * eps;
    double pen = 0.0;
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        pen += p.lambda(k) * std::pow(x(k) * x(k) + eps2, p.q(k) / 2.0);
    }
    return (op.apply(x) - b).squaredNorm() + 2.0 * pen;
}

std::vector<ChainViolation> audit_monotone_chain(
    const LinearOperator& op, const Vector& b,
    const std::vector<IterateSnapshot>& snapshots, const PenaltySpec& p) {
    std::vector<ChainViolation> violations;
    if (snapshots.size() < 2) return violations;

    constexpr double kSlack = 1e-10;
    auto violated = [&](double lhs, double rhs) {
        return lhs > rhs + kSlack * std::max(1.0, std::abs(rhs));
    };

    for (std::size_t i = 0; i + 1 < snapshots.size(); ++i) {
        const auto& cur = snapshots[i];
        const auto& nxt = snapshots[i + 1];
        if (cur.x.size() != nxt.x.size() || cur.x.size() != p.lambda.size()) {
            throw std::invalid_argument("audit_monotone_chain: snapshot dimension mismatch");
        }
        const Vector w_cur = irls_weights(cur.x, cur.eps, p.q);
        const Vector w_nxt = irls_weights(nxt.x, nxt.eps, p.q);

        const double gA = evaluate_G(op, b, nxt.x, nxt.x, w_nxt, nxt.eps, p);
        const double gB = evaluate_G(op, b, nxt.x, nxt.x, w_cur, nxt.eps, p);
        const double gC = evaluate_G(op, b, nxt.x, cur.x, w_cur, nxt.eps, p);
        const double gD = evaluate_G(op, b, nxt.x, cur.x, w_cur, cur.eps, p);
        const double gE = evaluate_G(op, b, cur.x, cur.x, w_cur, cur.eps, p);

        const int step = static_cast<int>(i);
        if (violated(gA, gB)) violations.push_back({step, 'A', gA, gB});
        if (violated(gB, gC)) violations.push_back({step, 'B', gB, gC});
        if (violated(gC, gD)) violations.push_back({step, 'C', gC, gD});
        if (violated(gD, gE)) violations.push_back({step, 'D', gD, gE});
    }
    return violations;
}

std::vector<IterateSnapshot> snapshots_from_result(const SolverResult& result) {
    const auto& trace = result.trace;
    if (trace.iterates.size() != trace.eps.size()) {
        throw std::invalid_argument(
            "snapshots_from_result: run was not traced with record_iterates");
    }
    std::vector<IterateSnapshot> snaps;
    snaps.reserve(trace.iterates.size() + 1);
    snaps.push_back({trace.x0, trace.eps0});
    for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
        snaps.push_back({trace.iterates[i], trace.eps[i]});
    }
    return snaps;
}

}  // namespace sparsereg
