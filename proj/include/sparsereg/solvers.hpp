#pragma once

#include "sparsereg/penalty.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sparsereg {

enum class SolverVariant { irls, firls, ista, fista };

const char* to_string(SolverVariant v);
SolverVariant solver_variant_from_string(const std::string& name);

/// All schemes assume ||A||_2 < 1; use rescale_problem first.
struct SolverConfig {
    SolverVariant variant = SolverVariant::irls;
    int max_iters = 300;
    double alpha = 0.9;      ///< epsilon-schedule decay base, in (0, 1)
    double eps_init = 1.0;   ///< epsilon_0 > 0
    std::optional<double> step_tol;  ///< default 1e-8 * sqrt(N)
    std::optional<Vector> x0;        ///< default zero vector
    bool trace_surrogate = false;    ///< record g_n for IRLS/FIRLS
    bool record_iterates = false;    ///< keep every iterate for chain audits
};

/// Per-iteration diagnostics.  Entry n (0-based) describes iterate x^{n+1}.
/// surrogate and eps hold NaN where not applicable (ISTA/FISTA, or
/// trace_surrogate off).
struct IterateTrace {
    std::vector<double> objective;      ///< F(x^n)
    std::vector<double> surrogate;      ///< g_n = G(x^n, x^n, w^n, eps_n)
    std::vector<double> eps;            ///< eps_n
    std::vector<double> step_norm;      ///< ||x^n - x^{n-1}||_2
    std::vector<double> residual_norm;  ///< ||A x^n - b||_2
    std::vector<Vector> iterates;       ///< filled when record_iterates
    Vector x0;          ///< starting point (snapshot for audits)
    double eps0 = 0.0;  ///< starting epsilon

    std::size_t size() const { return objective.size(); }
};

enum class Termination { step_tol_reached, max_iters };

struct SolverResult {
    Vector x_final;
    int iterations_run = 0;
    Termination termination = Termination::max_iters;
    IterateTrace trace;
};

/// Thrown when an iterate goes non-finite or the l1 divergence guard trips.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(int iteration, const std::string& what)
        : std::runtime_error(what), iteration_(iteration) {}
    int iteration() const { return iteration_; }

private:
    int iteration_;
};

/// Reweighting weights w_k = 1 / (x_k^2 + eps^2)^{(2-q_k)/2}.
/// Requires eps > 0 (eps = 0 would let zero entries produce diverging
/// weights) and q_k in (0, 2].  w_k = 1 exactly when q_k = 2.
Vector irls_weights(const Vector& x, double eps, const Vector& q);

/// eps_n = min(eps_prev, sqrt(step_norm + alpha^n)); positive, nonincreasing.
double epsilon_update(double eps_prev, double step_norm, double alpha, int n);

/// x+_k = (x_k + (A^T b)_k - (A^T A x)_k) / (1 + lambda_k q_k w_k).
Vector irls_step(const LinearOperator& op, const Vector& b, const Vector& x,
                 const Vector& w, const PenaltySpec& p);

/// S_tau(x + A^T b - A^T A x).
Vector ista_step(const LinearOperator& op, const Vector& b, const Vector& x,
                 double tau);

/// t+ = (1 + sqrt(1 + 4 t^2)) / 2, momentum coefficient (t - 1) / t+.
std::pair<double, double> fista_momentum_coefficient(double t_n);

/// IRLS update evaluated at the extrapolated point y, weights included.
Vector firls_step(const LinearOperator& op, const Vector& b, const Vector& y,
                  const Vector& w, const PenaltySpec& p);

/// Runs the configured scheme from x^0 until the step norm drops to
/// step_tol or max_iters is reached.  ISTA/FISTA accept only a uniform
/// q = 1 penalty with uniform lambda and refuse anything else.
SolverResult solve(const LinearOperator& op, const Vector& b,
                   const PenaltySpec& p, const SolverConfig& cfg);

}  // namespace sparsereg
