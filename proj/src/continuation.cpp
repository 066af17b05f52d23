#include "sparsereg/continuation.hpp"

#include <stdexcept>
#include <string>

namespace sparsereg {

ContinuationPath make_tau_path(double lambda_max, double final_divisor,
                               int count) {
    if (!(lambda_max > 0.0)) {
        throw std::invalid_argument("make_tau_path: lambda_max must be > 0");
    }
    if (!(final_divisor > 1.0)) {
        throw std::invalid_argument("make_tau_path: final_divisor must be > 1");
    }
    if (count < 1) throw std::invalid_argument("make_tau_path: count must be >= 1");
    ContinuationPath path;
    path.taus = logspace(lambda_max, lambda_max / final_divisor, count);
    return path;
}

PathResult solve_path(const SyntheticProblem& prob, const Vector& q,
                      const ContinuationPath& path, const SolverConfig& cfg,
                      bool experimental_subunit_q) {
    if (q.size() != prob.op->cols()) {
        throw std::invalid_argument("solve_path: q length does not match operator");
    }
    PathResult out;
    out.stages.reserve(path.taus.size());
    Vector warm = Vector::Zero(prob.op->cols());
    for (Eigen::Index i = 0; i < path.taus.size(); ++i) {
        const double tau = path.taus(i);
        SolverConfig stage_cfg = cfg;
        stage_cfg.max_iters = path.per_stage_iters;
        stage_cfg.x0 = warm;
        const PenaltySpec p = make_penalty(Vector::Constant(q.size(), tau), q,
                                           experimental_subunit_q);
        StageResult stage;
        stage.tau = tau;
        try {
            stage.result = solve(*prob.op, prob.b, p, stage_cfg);
        } catch (const std::exception& e) {
            throw std::runtime_error("solve_path: stage " + std::to_string(i) +
                                     " (tau = " + std::to_string(tau) +
                                     "): " + e.what());
        }
        if (prob.x_true) {
            stage.recovery_error_pct =
                recovery_error(stage.result.x_final, *prob.x_true);
        }
        warm = stage.result.x_final;
        out.stages.push_back(std::move(stage));
    }
    out.x_final = warm;
    return out;
}

}  // namespace sparsereg
