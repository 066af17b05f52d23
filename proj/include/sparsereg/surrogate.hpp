#pragma once

#include "sparsereg/penalty.hpp"
#include "sparsereg/solvers.hpp"

#include <vector>

namespace sparsereg {

/// Surrogate functional whose alternating minimization in w and x yields the
/// reweighted scheme.  With Q1 = {k : q_k < 2} and Q2 = {k : q_k = 2}:
///   G(x, a, w, eps) = ||Ax-b||^2 - ||A(x-a)||^2 + ||x-a||^2
///     + sum_{Q1} lambda_k ( q_k w_k (x_k^2 + eps^2) + (2-q_k) w_k^{q_k/(q_k-2)} )
///     + sum_{Q2} 2 lambda_k (x_k^2 + eps^2) (w_k^2 - 2 w_k + 2).
/// Used as test instrumentation, not inside the production solver loop.
double evaluate_G(const LinearOperator& op, const Vector& b, const Vector& x,
                  const Vector& a, const Vector& w, double eps,
                  const PenaltySpec& p);

/// Closed form of G on the diagonal (x = a, w the minimizing weights):
///   ||Ax-b||^2 + 2 sum_k lambda_k (x_k^2 + eps^2)^{q_k/2}.
double evaluate_G_diagonal(const LinearOperator& op, const Vector& b,
                           const Vector& x, double eps, const PenaltySpec& p);

/// One (iterate, epsilon) pair captured from a reweighted solver run.  The
/// minimizing weights are recomputed from (x, eps) on demand.
struct IterateSnapshot {
    Vector x;
    double eps = 0.0;
};

struct ChainViolation {
    int step = 0;   ///< index n of the transition x^n -> x^{n+1}
    char link = 0;  ///< which inequality failed: 'A', 'B', 'C' or 'D'
    double lhs = 0.0;
    double rhs = 0.0;
};

/// Audits the inequality chain
///   G(x+,x+,w+,e+) <= G(x+,x+,w,e+) <= G(x+,x,w,e+) <= G(x+,x,w,e) <= G(x,x,w,e)
/// over every consecutive snapshot pair of a reweighted run, each link with
/// 1e-10 relative slack.  Returns the violated links, empty when clean.
std::vector<ChainViolation> audit_monotone_chain(
    const LinearOperator& op, const Vector& b,
    const std::vector<IterateSnapshot>& snapshots, const PenaltySpec& p);

/// Extracts x^0, x^1, ..., x^N with their epsilons from a run traced with
/// record_iterates, ready for audit_monotone_chain.
std::vector<IterateSnapshot> snapshots_from_result(const SolverResult& result);

}  // namespace sparsereg
