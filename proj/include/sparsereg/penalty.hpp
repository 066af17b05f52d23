#pragma once

#include "sparsereg/linop.hpp"

namespace sparsereg {

/// Per-coordinate penalty specification: the objective is
///   ||Ax - b||_2^2 + 2 * sum_k lambda_k |x_k|^{q_k}
/// with q_k in [1, 2], or (0, 2] when experimental_subunit_q is set.
/// Values of q_k within 1e-12 of 2 are clamped to exactly 2 at validation.
struct PenaltySpec {
    Vector lambda;
    Vector q;
    bool experimental_subunit_q = false;

    /// Validates and clamps; throws std::invalid_argument on violations.
    /// Call once after construction (make_penalty does this for you).
    void validate(Eigen::Index n);

    bool q_is_two(Eigen::Index k) const { return q(k) == 2.0; }
};

/// Builds a validated PenaltySpec from per-coordinate vectors.
PenaltySpec make_penalty(Vector lambda, Vector q,
                         bool experimental_subunit_q = false);

/// Uniform lambda_k = lambda, q_k = q over n coordinates.
PenaltySpec make_uniform_penalty(Eigen::Index n, double lambda, double q,
                                 bool experimental_subunit_q = false);

/// ||Ax - b||_2^2 + 2 sum_k lambda_k |x_k|^{q_k}.
double evaluate_objective(const LinearOperator& op, const Vector& b,
                          const Vector& x, const PenaltySpec& p);

/// Penalty term 2 sum_k lambda_k |x_k|^{q_k} alone.
double penalty_value(const Vector& x, const PenaltySpec& p);

/// Componentwise soft-thresholding S_tau.  Throws if tau < 0.
Vector soft_threshold(const Vector& v, double tau);

/// ||A^T b||_inf: any uniform lambda above this makes the zero vector
/// optimal for q = 1.
double lambda_max(const LinearOperator& op, const Vector& b);

struct KktReport {
    Vector per_coordinate_residual;
    double max_residual = 0.0;
    double zero_tol = 0.0;
};

/// Normalized residuals of the per-coordinate optimality conditions, with
/// g = A^T (b - Ax):
///   |x_k| >  zero_tol:            |g_k - lambda_k sgn(x_k) q_k |x_k|^{q_k-1}| / max(lambda_k, 1)
///   |x_k| <= zero_tol, q_k = 1:   max(0, |g_k| - lambda_k) / max(lambda_k, 1)
///   |x_k| <= zero_tol, q_k > 1:   |g_k| / max(lambda_k, 1)
/// Refuses q_k outside [1, 2]: the conditions rely on convexity.
KktReport kkt_residual(const LinearOperator& op, const Vector& b,
                       const Vector& x, const PenaltySpec& p,
                       double zero_tol = 1e-10);

}  // namespace sparsereg
