#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sparsereg/problems.hpp"
#include "sparsereg/rng.hpp"
#include "sparsereg/surrogate.hpp"

#include <cmath>

using namespace sparsereg;

namespace {

Vector random_vector(Eigen::Index n, Rng& rng) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.normal();
    return v;
}

// Term-by-term re-summation of G written directly from its definition,
// independent of the library evaluator.
double oracle_G(const LinearOperator& op, const Vector& b, const Vector& x,
                const Vector& a, const Vector& w, double eps,
                const PenaltySpec& p) {
    double total = 0.0;
    const Vector ax = op.apply(x);
    for (Eigen::Index i = 0; i < ax.size(); ++i) {
        total += (ax(i) - b(i)) * (ax(i) - b(i));
    }
    const Vector axa = op.apply(x - a);
    for (Eigen::Index i = 0; i < axa.size(); ++i) total -= axa(i) * axa(i);
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        total += (x(k) - a(k)) * (x(k) - a(k));
    }
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        const double s = x(k) * x(k) + eps * eps;
        if (p.q(k) == 2.0) {
            total += 2.0 * p.lambda(k) * s * (w(k) * w(k) - 2.0 * w(k) + 2.0);
        } else {
            total += p.lambda(k) *
                     (p.q(k) * w(k) * s +
                      (2.0 - p.q(k)) * std::pow(w(k), p.q(k) / (p.q(k) - 2.0)));
        }
    }
    return total;
}

struct Instance {
    LinearOperatorPtr op;
    Vector b;
};

Instance make_instance(int m, int n, std::uint64_t seed) {
    auto prob = make_conditioned_problem(m, n, 1.0, 0.2, 0.4,
                                         SignalKind::random_support, seed);
    const auto scaled = rescale_problem(prob.op, prob.b);
    return {scaled.op, scaled.b};
}

PenaltySpec mixed_penalty(Eigen::Index n, Rng& rng) {
    Vector lam(n), q(n);
    const double choices[3] = {1.0, 1.5, 2.0};
    for (Eigen::Index k = 0; k < n; ++k) {
        lam(k) = 0.05 + rng.uniform();
        q(k) = choices[k % 3];
    }
    return make_penalty(lam, q);
}

}  // namespace

TEST_CASE("G at the diagonal equals its closed form") {
    Rng rng(111);
    const auto inst = make_instance(7, 5, 42);
    const auto p = mixed_penalty(5, rng);
    for (int t = 0; t < 100; ++t) {
        const Vector x = random_vector(5, rng);
        const double eps = 0.01 + rng.uniform();
        const Vector w = irls_weights(x, eps, p.q);
        const double g = evaluate_G(*inst.op, inst.b, x, x, w, eps, p);
        const double gd = evaluate_G_diagonal(*inst.op, inst.b, x, eps, p);
        CHECK(std::abs(g - gd) <= 1e-12 * std::max(1.0, std::abs(gd)));
    }
}

TEST_CASE("1D diagonal value with vanishing eps equals F") {
    RowMajorMatrix a(1, 1);
    a << 0.5;
    DenseOperator op(a);
    Vector b(1), x(1);
    b << 2.0;
    x << 1.0;
    const auto p = make_uniform_penalty(1, 1.0, 1.0);
    const Vector w = irls_weights(x, 1e-9, p.q);
    const double g = evaluate_G(op, b, x, x, w, 1e-9, p);
    CHECK(std::abs(g - 4.25) <= 1e-8);
}

TEST_CASE("G against the independent term-by-term oracle") {
    Rng rng(113);
    const auto inst = make_instance(6, 5, 77);
    const auto p = mixed_penalty(5, rng);
    for (int t = 0; t < 20; ++t) {
        const Vector x = random_vector(5, rng);
        const Vector a = random_vector(5, rng);
        const double eps = 0.05 + rng.uniform();
        const Vector w = irls_weights(a, eps, p.q);
        const double got = evaluate_G(*inst.op, inst.b, x, a, w, eps, p);
        const double expected = oracle_G(*inst.op, inst.b, x, a, w, eps, p);
        CHECK(std::abs(got - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("diagonal closed-form values") {
    RowMajorMatrix one(1, 1);
    one << 1.0;
    DenseOperator op(one);
    Vector b(1), x(1);
    b << 0.0;
    x << 0.0;
    const auto p = make_uniform_penalty(1, 1.0, 1.0);
    CHECK(evaluate_G_diagonal(op, b, x, 1.0, p) == doctest::Approx(2.0));

    // eps -> 0 limit at points away from zero recovers F
    Rng rng(117);
    const auto inst = make_instance(6, 6, 99);
    const auto pm = mixed_penalty(6, rng);
    for (int t = 0; t < 20; ++t) {
        Vector xr = random_vector(6, rng);
        for (Eigen::Index k = 0; k < 6; ++k) {
            if (std::abs(xr(k)) < 0.1) xr(k) = xr(k) < 0 ? -0.1 : 0.1;
        }
        const double gd = evaluate_G_diagonal(*inst.op, inst.b, xr, 1e-12, pm);
        const double f = evaluate_objective(*inst.op, inst.b, xr, pm);
        CHECK(std::abs(gd - f) < 1e-9);
    }
}

TEST_CASE("G_diag minus F stays within the eps^q envelope") {
    Rng rng(119);
    const auto inst = make_instance(8, 6, 123);
    const auto p = mixed_penalty(6, rng);
    for (int t = 0; t < 50; ++t) {
        const Vector x = random_vector(6, rng);
        const double eps = 0.01 + 2.0 * rng.uniform();
        const double gap = evaluate_G_diagonal(*inst.op, inst.b, x, eps, p) -
                           evaluate_objective(*inst.op, inst.b, x, p);
        double envelope = 0.0;
        for (Eigen::Index k = 0; k < 6; ++k) {
            envelope += 2.0 * p.lambda(k) * std::pow(eps, p.q(k));
        }
        CHECK(gap >= -1e-12);
        CHECK(gap <= envelope + 1e-12);
    }
}

TEST_CASE("minimizing weights beat perturbed weights") {
    Rng rng(127);
    const auto inst = make_instance(7, 6, 131);
    Vector lam(6), q(6);
    lam << 0.4, 0.9, 0.2, 1.1, 0.6, 0.3;
    q << 1.0, 1.5, 1.9, 2.0, 1.2, 2.0;
    const auto p = make_penalty(lam, q);
    const Vector x = random_vector(6, rng);
    const double eps = 0.3;
    const Vector w_star = irls_weights(x, eps, p.q);
    const double g_star = evaluate_G(*inst.op, inst.b, x, x, w_star, eps, p);
    for (int t = 0; t < 20; ++t) {
        Vector w = w_star;
        for (Eigen::Index k = 0; k < 6; ++k) {
            const double delta = 1e-2 * (2.0 * rng.uniform() - 1.0);
            w(k) = w_star(k) * (1.0 + delta);  // Q2 entries perturb around 1
        }
        const double g = evaluate_G(*inst.op, inst.b, x, x, w, eps, p);
        CHECK(g_star <= g + 1e-12 * std::abs(g));
    }
}

TEST_CASE("evaluate_G rejects bad weights and eps") {
    const auto inst = make_instance(4, 3, 151);
    const auto p = make_uniform_penalty(3, 0.5, 1.5);
    const Vector x = Vector::Ones(3);
    CHECK_THROWS_AS(
        evaluate_G(*inst.op, inst.b, x, x, Vector::Zero(3), 0.5, p),
        std::invalid_argument);
    CHECK_THROWS_AS(
        evaluate_G(*inst.op, inst.b, x, x, Vector::Ones(3), 0.0, p),
        std::invalid_argument);
}

TEST_CASE("chain audit") {
    const auto inst = make_instance(20, 20, 161);
    Rng rng(163);
    Vector q(20);
    const double choices[3] = {1.0, 1.5, 2.0};
    for (Eigen::Index k = 0; k < 20; ++k) q(k) = choices[k % 3];
    const double tau = lambda_max(*inst.op, inst.b) / 200.0;
    const auto p = make_penalty(Vector::Constant(20, tau), q);

    SolverConfig cfg;
    cfg.variant = SolverVariant::irls;
    cfg.max_iters = 100;
    cfg.step_tol = 0.0;
    cfg.record_iterates = true;
    const auto result = solve(*inst.op, inst.b, p, cfg);
    auto snaps = snapshots_from_result(result);

    SUBCASE("a genuine run has no violations") {
        CHECK(audit_monotone_chain(*inst.op, inst.b, snaps, p).empty());
    }
    SUBCASE("corrupting an iterate trips link D") {
        snaps[40].x = 10.0 * random_vector(20, rng);
        const auto violations = audit_monotone_chain(*inst.op, inst.b, snaps, p);
        REQUIRE(!violations.empty());
        bool found_d = false;
        for (const auto& v : violations) {
            found_d = found_d || (v.link == 'D' && v.step == 39);
        }
        CHECK(found_d);
    }
    SUBCASE("a single snapshot is vacuously clean") {
        const std::vector<IterateSnapshot> single = {snaps.front()};
        CHECK(audit_monotone_chain(*inst.op, inst.b, single, p).empty());
    }
}
