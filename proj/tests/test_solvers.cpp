#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sparsereg/io.hpp"
#include "sparsereg/problems.hpp"
#include "sparsereg/rng.hpp"
#include "sparsereg/solvers.hpp"
#include "sparsereg/surrogate.hpp"

#include <Eigen/Dense>

#include <sstream>

using namespace sparsereg;

namespace {

Vector random_vector(Eigen::Index n, Rng& rng) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.normal();
    return v;
}

// Rescaled random sparse instance with ||A||_2 <= 0.99.
struct Instance {
    LinearOperatorPtr op;
    Vector b;
    Vector x_true;
};

Instance make_instance(int m, int n, double sv_lo, double density,
                       std::uint64_t seed) {
    auto prob = make_conditioned_problem(m, n, 1.0, sv_lo, density,
                                         SignalKind::random_support, seed);
    const auto scaled = rescale_problem(prob.op, prob.b);
    return {scaled.op, scaled.b, *prob.x_true};
}

}  // namespace

TEST_CASE("irls_weights") {
    Vector x(1), q(1);
    x << 0.0;
    q << 1.0;
    CHECK(irls_weights(x, 1.0, q)(0) == doctest::Approx(1.0));

    x << 3.0;
    CHECK(irls_weights(x, 4.0, q)(0) == doctest::Approx(0.2));

    Rng rng(71);
    Vector xr = random_vector(10, rng);
    CHECK((irls_weights(xr, 0.5, Vector::Constant(10, 2.0)) -
           Vector::Ones(10))
              .norm() == 0.0);

    CHECK_THROWS_AS(irls_weights(x, 0.0, q), std::invalid_argument);
    CHECK_THROWS_AS(irls_weights(x, -1.0, q), std::invalid_argument);
    CHECK_THROWS_AS(irls_weights(x, 1.0, Vector::Constant(1, 2.5)),
                    std::invalid_argument);
}

TEST_CASE("epsilon_update") {
    CHECK(epsilon_update(1.0, 0.21, std::pow(0.04, 1.0), 1) ==
          doctest::Approx(0.5));  // alpha^1 = 0.04
    CHECK(epsilon_update(0.01, 1.0, 0.9, 3) == doctest::Approx(0.01));
    CHECK(epsilon_update(10.0, 0.0, 0.9, 2) == doctest::Approx(0.9));
}

TEST_CASE("irls_step scalar cases") {
    RowMajorMatrix a(1, 1);
    a << 0.5;
    DenseOperator op(a);
    Vector b(1), x(1);
    b << 2.0;
    x << 0.0;

    const auto p1 = make_uniform_penalty(1, 1.0, 1.0);
    const Vector w = irls_weights(x, 1.0, p1.q);
    CHECK(irls_step(op, b, x, w, p1)(0) == doctest::Approx(0.5));

    const auto p2 = make_uniform_penalty(1, 1.0, 2.0);
    const Vector w2 = irls_weights(x, 1.0, p2.q);
    CHECK(irls_step(op, b, x, w2, p2)(0) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("q = 2 fixed point matches the ridge direct solve") {
    Rng rng(73);
    const auto inst = make_instance(12, 12, 0.3, 0.4, 101);
    const Eigen::Index n = inst.op->cols();
    const double lam = 0.2;
    const auto p = make_uniform_penalty(n, lam, 2.0);

    SolverConfig cfg;
    cfg.variant = SolverVariant::irls;
    cfg.max_iters = 20000;
    cfg.step_tol = 1e-14;
    const auto result = solve(*inst.op, inst.b, p, cfg);

    // independent oracle: (A^T A + 2 lambda I) x = A^T b on a materialized A
    Eigen::MatrixXd a(inst.op->rows(), n);
    for (Eigen::Index j = 0; j < n; ++j) {
        a.col(j) = inst.op->apply(Vector::Unit(n, j));
    }
    const Eigen::VectorXd x_star =
        (a.transpose() * a + 2.0 * lam * Eigen::MatrixXd::Identity(n, n))
            .ldlt()
            .solve(a.transpose() * inst.b);
    CHECK((result.x_final - x_star).lpNorm<Eigen::Infinity>() <= 1e-8);
}

TEST_CASE("ista_step") {
    RowMajorMatrix a(1, 1);
    a << 0.5;
    DenseOperator op(a);
    Vector b(1), x(1);
    b << 2.0;
    x << 0.0;
    CHECK(ista_step(op, b, x, 0.4)(0) == doctest::Approx(0.6));
    CHECK(ista_step(op, b, x, 2.0)(0) == 0.0);
}

TEST_CASE("1D ISTA fixed point equals the analytic lasso solution") {
    Rng rng(79);
    for (int t = 0; t < 5; ++t) {
        const double a = 0.2 + 0.7 * rng.uniform();
        const double bv = 4.0 * (rng.uniform() - 0.5);
        const double tau = 0.05 + 0.3 * rng.uniform();
        RowMajorMatrix am(1, 1);
        am << a;
        DenseOperator op(am);
        Vector b(1);
        b << bv;

        Vector x = Vector::Zero(1);
        for (int i = 0; i < 500; ++i) x = ista_step(op, b, x, tau);

        Vector ratio(1);
        ratio << bv / a;
        const double analytic = soft_threshold(ratio, tau / (a * a))(0);
        CHECK(std::abs(x(0) - analytic) <= 1e-8);
    }
}

TEST_CASE("fista momentum coefficients") {
    const auto [t2, c1] = fista_momentum_coefficient(1.0);
    CHECK(t2 == doctest::Approx(1.618034).epsilon(1e-6));
    CHECK(c1 == 0.0);
    const auto [t3, c2] = fista_momentum_coefficient(t2);
    CHECK(t3 == doctest::Approx(2.194426).epsilon(1e-6));
    CHECK(c2 > 0.0);

    Rng rng(83);
    for (int i = 0; i < 100; ++i) {
        const double t = 1.0 + 10.0 * rng.uniform();
        CHECK(fista_momentum_coefficient(t).first > t);
    }
}

TEST_CASE("firls_step at y = x reduces to irls_step") {
    Rng rng(89);
    for (int t = 0; t < 20; ++t) {
        const auto inst = make_instance(8, 8, 0.3, 0.5, 200 + t);
        const Eigen::Index n = inst.op->cols();
        Vector lam(n), q(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            lam(k) = 0.1 + rng.uniform();
            q(k) = 1.0 + rng.uniform();
        }
        const auto p = make_penalty(lam, q);
        const Vector x = random_vector(n, rng);
        const Vector w = irls_weights(x, 0.7, p.q);
        CHECK((firls_step(*inst.op, inst.b, x, w, p) -
               irls_step(*inst.op, inst.b, x, w, p))
                  .norm() == 0.0);
    }
}

TEST_CASE("first FIRLS iteration equals the first IRLS iteration") {
    const auto inst = make_instance(10, 10, 0.3, 0.4, 301);
    const auto p = make_uniform_penalty(10, 0.05, 1.0);
    SolverConfig cfg;
    cfg.max_iters = 1;
    cfg.step_tol = 0.0;
    cfg.variant = SolverVariant::irls;
    const auto r_irls = solve(*inst.op, inst.b, p, cfg);
    cfg.variant = SolverVariant::firls;
    const auto r_firls = solve(*inst.op, inst.b, p, cfg);
    CHECK((r_irls.x_final - r_firls.x_final).norm() == 0.0);
}

TEST_CASE("FIRLS at 50 iterations reaches IRLS's 300-iteration objective") {
    const auto inst = make_instance(50, 50, 0.7, 0.1, 401);
    const auto p = make_uniform_penalty(
        50, lambda_max(*inst.op, inst.b) / 100.0, 1.0);
    SolverConfig cfg;
    cfg.step_tol = 0.0;
    cfg.variant = SolverVariant::firls;
    cfg.max_iters = 50;
    const auto fast = solve(*inst.op, inst.b, p, cfg);
    cfg.variant = SolverVariant::irls;
    cfg.max_iters = 300;
    const auto slow = solve(*inst.op, inst.b, p, cfg);
    CHECK(std::abs(fast.trace.objective.back() - slow.trace.objective.back()) <=
          1e-6);
}

TEST_CASE("solve returns the zero vector above lambda_max") {
    const auto inst = make_instance(40, 40, 0.1, 0.2, 501);
    const double lmax = lambda_max(*inst.op, inst.b);
    SolverConfig cfg;
    cfg.variant = SolverVariant::irls;
    cfg.max_iters = 500;
    cfg.step_tol = 0.0;
    const auto result =
        solve(*inst.op, inst.b, make_uniform_penalty(40, 1.01 * lmax, 1.0), cfg);
    CHECK(result.x_final.lpNorm<Eigen::Infinity>() < 1e-6);
}

TEST_CASE("zero data from a zero start stops after one iteration") {
    const auto inst = make_instance(6, 6, 0.5, 0.5, 601);
    SolverConfig cfg;
    cfg.variant = SolverVariant::irls;
    cfg.max_iters = 50;
    const auto result = solve(*inst.op, Vector::Zero(6),
                              make_uniform_penalty(6, 0.5, 1.0), cfg);
    CHECK(result.iterations_run == 1);
    CHECK(result.termination == Termination::step_tol_reached);
    CHECK(result.x_final.norm() == 0.0);
}

TEST_CASE("IRLS and ISTA objectives agree on uniform l1 problems") {
    for (std::uint64_t seed : {701, 702}) {
        const auto inst = make_instance(100, 100, 0.1, 0.05, seed);
        const double tau = lambda_max(*inst.op, inst.b) / 1e3;
        const auto p = make_uniform_penalty(100, tau, 1.0);
        SolverConfig cfg;
        cfg.max_iters = 300;
        cfg.step_tol = 0.0;
        cfg.variant = SolverVariant::irls;
        const double f_irls = solve(*inst.op, inst.b, p, cfg).trace.objective.back();
        cfg.variant = SolverVariant::ista;
        const double f_ista = solve(*inst.op, inst.b, p, cfg).trace.objective.back();
        CHECK(std::abs(f_irls - f_ista) / f_ista < 1e-4);
    }
}

TEST_CASE("ISTA and FISTA refuse non-uniform penalties") {
    const auto inst = make_instance(5, 5, 0.5, 0.4, 801);
    Vector lam = Vector::Constant(5, 0.1);
    Vector q = Vector::Constant(5, 1.0);
    q(2) = 1.5;
    SolverConfig cfg;
    cfg.variant = SolverVariant::ista;
    CHECK_THROWS_WITH_AS(solve(*inst.op, inst.b, make_penalty(lam, q), cfg),
                         doctest::Contains("uniform"), std::invalid_argument);

    Vector lam2 = lam;
    lam2(1) = 0.2;
    cfg.variant = SolverVariant::fista;
    CHECK_THROWS_AS(
        solve(*inst.op, inst.b, make_penalty(lam2, Vector::Constant(5, 1.0)), cfg),
        std::invalid_argument);
}

TEST_CASE("divergence on an unscaled operator raises with the iteration index") {
    RowMajorMatrix a(1, 1);
    a << 2.0;  // spectral norm above 1, precondition violated on purpose
    DenseOperator op(a);
    Vector b(1);
    b << 1.0;
    SolverConfig cfg;
    cfg.variant = SolverVariant::ista;
    cfg.max_iters = 10000;
    cfg.step_tol = 0.0;
    try {
        solve(op, b, make_uniform_penalty(1, 1e-3, 1.0), cfg);
        FAIL("expected DivergenceError");
    } catch (const DivergenceError& e) {
        CHECK(e.iteration() > 0);
        CHECK(std::string(e.what()).find(std::to_string(e.iteration())) !=
              std::string::npos);
    }
}

TEST_CASE("IRLS trace invariants on a canonical run") {
    const auto inst = make_instance(30, 30, 0.1, 0.2, 901);
    const double tau = lambda_max(*inst.op, inst.b) / 1e3;
    const auto p = make_uniform_penalty(30, tau, 1.0);
    SolverConfig cfg;
    cfg.variant = SolverVariant::irls;
    cfg.max_iters = 300;
    cfg.step_tol = 0.0;
    cfg.trace_surrogate = true;
    cfg.record_iterates = true;
    const auto result = solve(*inst.op, inst.b, p, cfg);
    const auto& tr = result.trace;

    REQUIRE(tr.size() <= static_cast<std::size_t>(cfg.max_iters));
    CHECK((result.x_final - tr.iterates.back()).norm() == 0.0);

    SUBCASE("sandwich: 0 <= F(x_n) <= g_n") {
        for (std::size_t i = 0; i < tr.size(); ++i) {
            CHECK(tr.objective[i] >= 0.0);
            CHECK(tr.objective[i] <=
                  tr.surrogate[i] + 1e-10 * std::abs(tr.surrogate[i]));
        }
    }
    SUBCASE("g_n is nonincreasing") {
        for (std::size_t i = 1; i < tr.size(); ++i) {
            CHECK(tr.surrogate[i] <=
                  tr.surrogate[i - 1] + 1e-12 * std::abs(tr.surrogate[i - 1]));
        }
    }
    SUBCASE("eps positive and nonincreasing") {
        double prev = tr.eps0;
        for (std::size_t i = 0; i < tr.size(); ++i) {
            CHECK(tr.eps[i] > 0.0);
            CHECK(tr.eps[i] <= prev);
            prev = tr.eps[i];
        }
    }
    SUBCASE("step norms fall off") {
        double sum_sq = 0.0;
        double first_nonzero = 0.0;
        for (const double s : tr.step_norm) {
            sum_sq += s * s;
            if (first_nonzero == 0.0 && s > 0.0) first_nonzero = s;
        }
        CHECK(std::isfinite(sum_sq));
        CHECK(tr.step_norm.back() < 0.01 * first_nonzero);
    }
    SUBCASE("l1 bound from the first surrogate value") {
        const double g1 = tr.surrogate.front();
        double bound = 0.0;
        for (Eigen::Index k = 0; k < 30; ++k) {
            bound = std::max(bound, std::pow(g1 / p.lambda(k), 1.0 / p.q(k)));
        }
        bound *= 30.0;
        for (const auto& x : tr.iterates) {
            CHECK(x.lpNorm<1>() <= bound);
        }
    }
    SUBCASE("x-minimization of the surrogate") {
        // x^{n+1} minimizes G(., x^n, w^n, eps_n); any perturbation of the
        // anchor point scores no better.
        Rng rng(907);
        const std::size_t n_idx = 100;
        const Vector& x_cur = tr.iterates[n_idx];
        const Vector& x_next = tr.iterates[n_idx + 1];
        const double eps_cur = tr.eps[n_idx];
        const Vector w = irls_weights(x_cur, eps_cur, p.q);
        const double g_min =
            evaluate_G(*inst.op, inst.b, x_next, x_cur, w, eps_cur, p);
        for (int t = 0; t < 20; ++t) {
            Vector delta = random_vector(30, rng);
            delta *= 1e-3 / delta.norm();
            const double g_pert = evaluate_G(*inst.op, inst.b, x_cur + delta,
                                             x_cur, w, eps_cur, p);
            CHECK(g_min <= g_pert + 1e-12 * std::abs(g_pert));
        }
    }
    SUBCASE("KKT residual is small after a converged run") {
        SolverConfig tight = cfg;
        tight.step_tol = 1e-10;
        tight.max_iters = 200000;
        const auto converged = solve(*inst.op, inst.b, p, tight);
        CHECK(converged.termination == Termination::step_tol_reached);
        CHECK(kkt_residual(*inst.op, inst.b, converged.x_final, p).max_residual <
              1e-4);
    }
}

TEST_CASE("trace CSV export") {
    const auto inst = make_instance(10, 10, 0.3, 0.3, 1001);
    const auto p = make_uniform_penalty(10, 0.05, 1.0);
    SolverConfig cfg;
    cfg.max_iters = 7;
    cfg.step_tol = 0.0;

    SUBCASE("IRLS rows carry G and eps") {
        cfg.variant = SolverVariant::irls;
        cfg.trace_surrogate = true;
        const auto result = solve(*inst.op, inst.b, p, cfg);
        std::ostringstream os;
        write_trace_csv(os, result.trace);
        std::istringstream is(os.str());
        std::string line;
        std::getline(is, line);
        CHECK(line == "iter,F,G,eps,step_norm,residual_norm");
        int rows = 0;
        while (std::getline(is, line)) {
            ++rows;
            CHECK(line.find(",,") == std::string::npos);
        }
        CHECK(rows == 7);
    }
    SUBCASE("ISTA rows have empty G and eps fields") {
        cfg.variant = SolverVariant::ista;
        const auto result = solve(*inst.op, inst.b, p, cfg);
        std::ostringstream os;
        write_trace_csv(os, result.trace);
        std::istringstream is(os.str());
        std::string line;
        std::getline(is, line);
        int rows = 0;
        while (std::getline(is, line)) {
            ++rows;
            CHECK(line.find(",,,") != std::string::npos);  // G and eps empty
        }
        CHECK(rows == 7);
    }
}
