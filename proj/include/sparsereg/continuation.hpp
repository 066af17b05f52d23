#pragma once

#include "sparsereg/problems.hpp"
#include "sparsereg/solvers.hpp"

namespace sparsereg {

/// Strictly decreasing regularization strengths with a fixed per-stage
/// iteration budget.
struct ContinuationPath {
    Vector taus;
    int per_stage_iters = 40;
};

/// count values geometrically spaced from lambda_max down to
/// lambda_max / final_divisor.
ContinuationPath make_tau_path(double lambda_max, double final_divisor,
                               int count);

struct StageResult {
    double tau = 0.0;
    SolverResult result;
    std::optional<double> recovery_error_pct;
};

struct PathResult {
    std::vector<StageResult> stages;
    Vector x_final;
};

/// Solves the problem at each tau in turn with uniform lambda_k = tau and
/// the given per-coordinate q, warm-starting every stage from the previous
/// solution (zero vector for stage 0).  IRLS/FIRLS restart the epsilon
/// schedule from cfg.eps_init at each stage.  Set experimental_subunit_q to
/// allow q_k < 1 (no convergence guarantees there).
PathResult solve_path(const SyntheticProblem& prob, const Vector& q,
                      const ContinuationPath& path, const SolverConfig& cfg,
                      bool experimental_subunit_q = false);

}  // namespace sparsereg
