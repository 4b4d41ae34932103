#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <sstream>

#include "vmfb/errors.hpp"
#include "vmfb/rng.hpp"
#include "vmfb/solvers.hpp"

using namespace vmfb;

namespace {

/// Random symmetric positive definite quadratic with a nonnegative minimizer
/// pull, shared by the solver comparison tests.
CompositeProblem random_quadratic(unsigned seed, std::size_t n,
                                  NonsmoothTerm g = NonsmoothTerm::nonneg(),
                                  FeasibleSet domain = FeasibleSet::nonneg_orthant()) {
    Rng rng(seed);
    Vec m(n * n);
    for (double& v : m) v = rng.uniform(-1.0, 1.0);
    Vec c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += m[k * n + i] * m[k * n + j];
            c[i * n + j] = s + (i == j ? 0.5 : 0.0);
        }
    Vec p(n);
    for (double& v : p) v = rng.uniform(-1.0, 1.0);
    auto cop = std::make_shared<const DenseOperator>(n, n, std::move(c));
    auto f = std::make_shared<const QuadraticForm>(cop, std::move(p));
    CompositeProblem prob;
    prob.lipschitz = f->lipschitz_bound();
    prob.smooth = std::move(f);
    prob.nonsmooth = g;
    prob.domain = domain;
    return prob;
}

/// f(x) = ||x||^2 / 2: identity quadratic with zero linear term.
CompositeProblem half_norm_sq(std::size_t n) {
    Vec c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) c[i * n + i] = 1.0;
    auto cop = std::make_shared<const DenseOperator>(n, n, std::move(c));
    CompositeProblem prob;
    prob.smooth = std::make_shared<const QuadraticForm>(cop, Vec(n, 0.0));
    return prob;
}

} // namespace

TEST_CASE("inertia schedule values") {
    const InertiaSchedule s(2.0);
    CHECK(s.theta(0) == 1.0);
    CHECK(s.beta(0) == 0.0);
    CHECK(s.beta(1) == 0.0);
    CHECK(s.beta(2) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(s.theta(3) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(InertiaSchedule{}.a == 2.1);

    CHECK_THROWS_AS(InertiaSchedule(1.9), std::invalid_argument);
    CHECK_THROWS_AS(InertiaSchedule(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(InertiaSchedule(std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS((void)s.theta(-1), std::invalid_argument);
    CHECK_THROWS_AS((void)s.beta(-1), std::invalid_argument);
}

TEST_CASE("inertia schedule satisfies the rate recursion inequalities") {
    for (double a : {2.0, 2.1, 3.5, 10.0}) {
        const InertiaSchedule s(a);
        for (int k = 1; k <= 400; ++k) {
            const double tk = s.theta(k);
            const double tp = s.theta(k - 1);
            // (1 - theta_k)/theta_k^2 <= 1/theta_{k-1}^2 drives the 1/k^2 rate.
            CHECK((1.0 - tk) / (tk * tk) <= 1.0 / (tp * tp) + 1e-12);
            // beta_k = theta_k (1/theta_{k-1} - 1) links the two sequences.
            CHECK(s.beta(k) ==
                  doctest::Approx(tk * (1.0 / tp - 1.0)).epsilon(1e-13));
            CHECK(s.beta(k) >= 0.0);
            CHECK(s.beta(k) < 1.0);
        }
    }
}

TEST_CASE("algorithm names round-trip") {
    for (auto a : {Algorithm::sfbem, Algorithm::fista, Algorithm::gp, Algorithm::sgp,
                   Algorithm::bb_fb})
        CHECK(algorithm_from_name(algorithm_name(a)) == a);
    CHECK_THROWS_AS((void)algorithm_from_name("newton"), std::invalid_argument);
}

TEST_CASE("configuration validation") {
    const CompositeProblem prob = random_quadratic(1, 4);
    const Vec x0(4, 1.0);

    SolverConfig ok;
    CHECK_NOTHROW((void)run_solver(ok, prob, x0));

    SolverConfig bad = ok;
    bad.alpha0 = 0.0;
    CHECK_THROWS_AS((void)run_solver(bad, prob, x0), std::invalid_argument);
    bad.alpha0 = -2.0;
    CHECK_THROWS_AS((void)run_solver(bad, prob, x0), std::invalid_argument);
    bad.alpha0 = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS((void)run_solver(bad, prob, x0), std::invalid_argument);

    bad = ok;
    bad.backtrack_delta = 0.0;
    CHECK_THROWS_AS((void)run_solver(bad, prob, x0), std::invalid_argument);
    bad.backtrack_delta = 1.0;
    CHECK_THROWS_AS((void)run_solver(bad, prob, x0), std::invalid_argument);

    bad = ok;
    bad.max_iter = -1;
    CHECK_THROWS_AS((void)run_solver(bad, prob, x0), std::invalid_argument);

    // Split metric requires a bound schedule.
    bad = ok;
    bad.metric = MetricPolicy::split_gradient;
    bad.bounds.reset();
    CHECK_THROWS_AS((void)run_solver(bad, prob, x0), std::invalid_argument);

    // Identity-metric algorithms reject a scaling request.
    for (auto alg : {Algorithm::fista, Algorithm::gp, Algorithm::bb_fb}) {
        bad = ok;
        bad.algorithm = alg;
        bad.metric = MetricPolicy::split_gradient;
        bad.bounds = BoundSchedule(1.0, 2.5);
        CHECK_THROWS_AS((void)run_solver(bad, prob, x0), std::invalid_argument);
    }

    // Dimension mismatch and infeasible starts.
    CHECK_THROWS_AS((void)run_solver(ok, prob, Vec(3, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS((void)run_solver(ok, prob, Vec{1.0, -1.0, 1.0, 1.0}),
                    std::invalid_argument);
    CompositeProblem simplex_prob =
        random_quadratic(2, 4, NonsmoothTerm::simplex(), FeasibleSet::all_space());
    CHECK_THROWS_AS((void)run_solver(ok, simplex_prob, Vec(4, 1.0)),
                    std::invalid_argument);
    CHECK_NOTHROW((void)run_solver(ok, simplex_prob, Vec(4, 0.25)));

    CompositeProblem null_prob = prob;
    null_prob.smooth = nullptr;
    CHECK_THROWS_AS((void)run_solver(ok, null_prob, x0), std::invalid_argument);
}

TEST_CASE("zero-iteration budget returns the start point") {
    const CompositeProblem prob = random_quadratic(3, 5);
    SolverConfig cfg;
    cfg.max_iter = 0;
    const Vec x0(5, 2.0);
    const SolverRun run = run_solver(cfg, prob, x0);
    CHECK(run.x_final == x0);
    CHECK(run.history.empty());
    CHECK(run.stop_reason == StopReason::budget_exhausted);
}

TEST_CASE("first step on the identity quadratic is the exact gradient step") {
    const CompositeProblem prob = half_norm_sq(2);
    const Vec x0 = {3.0, -4.0};

    for (auto alg : {Algorithm::sfbem, Algorithm::fista}) {
        // alpha0 = 1 satisfies the quadratic upper model with equality up to
        // the round-off allowance, so the very first trial is accepted and
        // lands exactly at the minimizer.
        SolverConfig cfg;
        cfg.algorithm = alg;
        cfg.alpha0 = 1.0;
        cfg.max_iter = 1;
        const SolverRun run = run_solver(cfg, prob, x0);
        REQUIRE(run.history.size() == 1);
        CHECK(run.history[0].k == 1);
        CHECK(run.history[0].alpha == 1.0);
        CHECK(run.history[0].backtracks == 0);
        CHECK(run.history[0].objective == 0.0);
        CHECK(run.history[0].accept_slack >= 0.0);
        CHECK(run.history[0].accept_slack < 1e-8);
        CHECK(run.x_final == Vec{0.0, 0.0});

        // alpha0 = 2 overshoots; one halving brings it back to 1.
        cfg.alpha0 = 2.0;
        const SolverRun bt = run_solver(cfg, prob, x0);
        CHECK(bt.history[0].alpha == 1.0);
        CHECK(bt.history[0].backtracks == 1);
        CHECK(bt.x_final == Vec{0.0, 0.0});
    }
}

TEST_CASE("step sizes never increase and acceptance slack stays nonnegative") {
    const CompositeProblem prob =
        random_quadratic(4, 8, NonsmoothTerm::nonneg_l1(0.1));
    const Vec x0(8, 0.5);
    for (auto alg : {Algorithm::sfbem, Algorithm::fista}) {
        SolverConfig cfg;
        cfg.algorithm = alg;
        cfg.alpha0 = 10.0;
        cfg.max_iter = 150;
        const SolverRun run = run_solver(cfg, prob, x0);
        REQUIRE(run.history.size() == 150);
        for (std::size_t k = 0; k < run.history.size(); ++k) {
            const IterationRecord& r = run.history[k];
            CHECK(r.accept_slack >= 0.0);
            CHECK(r.gamma == 1.0);
            CHECK(r.rel_change >= 0.0);
            if (k > 0) {
                CHECK(r.alpha <= run.history[k - 1].alpha);
                CHECK(r.time_s >= run.history[k - 1].time_s);
            }
        }
    }
}

TEST_CASE("split-gradient runs expose the bound schedule and the metrics") {
    // Small linear-model divergence problem with a dense positive matrix.
    Rng rng(9);
    const std::size_t rows = 6, cols = 4;
    Vec a(rows * cols);
    for (double& v : a) v = rng.uniform(0.1, 1.0);
    auto op = std::make_shared<const DenseOperator>(rows, cols, std::move(a), true);
    Vec counts = {2.0, 0.0, 5.0, 1.0, 3.0, 4.0};
    CompositeProblem prob;
    prob.smooth = std::make_shared<const KullbackLeibler>(op, counts, 0.5);
    prob.nonsmooth = NonsmoothTerm::nonneg();
    prob.domain = FeasibleSet::nonneg_orthant();

    SolverConfig cfg;
    cfg.algorithm = Algorithm::sfbem;
    cfg.metric = MetricPolicy::split_gradient;
    cfg.bounds = BoundSchedule(10.0, 2.5);
    cfg.max_iter = 40;
    cfg.record_metrics = true;
    const Vec x0(cols, 1.0);
    const SolverRun run = run_solver(cfg, prob, x0);

    REQUIRE(run.history.size() == 40);
    REQUIRE(run.metric_diagonals.size() == 40);
    for (std::size_t k = 0; k < run.history.size(); ++k) {
        const double g = cfg.bounds->gamma(static_cast<int>(k));
        CHECK(run.history[k].gamma == doctest::Approx(g).epsilon(1e-15));
        CHECK(run.history[k].accept_slack >= 0.0);
        REQUIRE(run.metric_diagonals[k].size() == cols);
        for (double d : run.metric_diagonals[k]) {
            CHECK(d >= 1.0 / g * (1.0 - 1e-12));
            CHECK(d <= g * (1.0 + 1e-12));
        }
    }
    // The recorded sequence satisfies the inter-iteration metric conditions.
    std::vector<DiagonalMetric> metrics;
    for (std::size_t k = 0; k < run.metric_diagonals.size(); ++k)
        metrics.emplace_back(run.metric_diagonals[k],
                             cfg.bounds->gamma(static_cast<int>(k)), cfg.bounds->eta());
    CHECK(verify_sequence_conditions(metrics, *cfg.bounds).conditions_pass);

    // Identity runs record unit diagonals when asked.
    cfg.metric = MetricPolicy::identity;
    cfg.bounds.reset();
    const SolverRun ident = run_solver(cfg, prob, x0);
    REQUIRE(ident.metric_diagonals.size() == 40);
    CHECK(ident.metric_diagonals[7] == Vec(cols, 1.0));
    CHECK(ident.history[7].gamma == 1.0);
}

TEST_CASE("scaled gradient projection with identity metric reproduces gp") {
    const CompositeProblem prob = random_quadratic(5, 6);
    const Vec x0(6, 1.0);
    SolverConfig gp;
    gp.algorithm = Algorithm::gp;
    gp.max_iter = 60;
    SolverConfig sgp = gp;
    sgp.algorithm = Algorithm::sgp;
    sgp.metric = MetricPolicy::identity;

    const SolverRun a = run_solver(gp, prob, x0);
    const SolverRun b = run_solver(sgp, prob, x0);
    REQUIRE(a.history.size() == b.history.size());
    for (std::size_t k = 0; k < a.history.size(); ++k) {
        CHECK(a.history[k].objective == b.history[k].objective);
        CHECK(a.history[k].alpha == b.history[k].alpha);
        CHECK(a.history[k].backtracks == b.history[k].backtracks);
    }
    CHECK(a.x_final == b.x_final);
}

TEST_CASE("fixed-step variant reduces to plain projected forward-backward") {
    const CompositeProblem prob = random_quadratic(6, 5);
    REQUIRE(prob.lipschitz.has_value());
    const double alpha = 0.4 / *prob.lipschitz;
    const Vec x0(5, 1.0);

    SolverConfig cfg;
    cfg.algorithm = Algorithm::bb_fb;
    cfg.bb_enabled = false;
    cfg.alpha0 = alpha;
    cfg.max_iter = 50;
    cfg.record_iterates = true;
    const SolverRun run = run_solver(cfg, prob, x0);
    REQUIRE(run.iterates.size() == 50);

    // Hand-rolled recursion x+ = max(0, x - alpha grad f(x)). The step is well
    // inside the always-accepted range, so no halving may occur.
    Vec x = x0;
    for (std::size_t k = 0; k < run.history.size(); ++k) {
        CHECK(run.history[k].alpha == alpha);
        CHECK(run.history[k].backtracks == 0);
        Vec g = prob.smooth->gradient(x);
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = std::max(0.0, x[i] - alpha * g[i]);
        for (std::size_t i = 0; i < x.size(); ++i)
            CHECK(run.iterates[k][i] == doctest::Approx(x[i]).epsilon(1e-12));
    }

    // Adaptive steps reach a lower objective in the same budget.
    cfg.bb_enabled = true;
    const SolverRun bb = run_solver(cfg, prob, x0);
    CHECK(bb.last().objective <= run.last().objective + 1e-12);
    for (const IterationRecord& r : bb.history) {
        CHECK(r.alpha >= 1e-10);
        CHECK(r.alpha <= 1e10);
    }
}

TEST_CASE("budget stop runs the exact number of iterations") {
    const CompositeProblem prob = random_quadratic(7, 4);
    SolverConfig cfg;
    cfg.max_iter = 7;
    const SolverRun run = run_solver(cfg, prob, Vec(4, 1.0));
    CHECK(run.history.size() == 7);
    CHECK(run.stop_reason == StopReason::budget_exhausted);
}

TEST_CASE("relative-change stop fires at the first sub-tolerance step") {
    const CompositeProblem prob = random_quadratic(8, 6);
    SolverConfig cfg;
    cfg.algorithm = Algorithm::fista;
    cfg.max_iter = 20000;
    cfg.stop = StopRule::iterate_rel_change(1e-6);
    cfg.record_iterates = true;
    const Vec x0(6, 1.0);
    const SolverRun run = run_solver(cfg, prob, x0);
    REQUIRE(run.stop_reason == StopReason::iterate_rel_change);
    REQUIRE(run.history.size() < 20000);

    Vec prev = x0;
    for (std::size_t k = 0; k < run.iterates.size(); ++k) {
        const double denom = norm2(prev);
        const double rel = norm2(sub(run.iterates[k], prev)) / denom;
        CHECK(run.history[k].rel_change == doctest::Approx(rel).epsilon(1e-12));
        if (k + 1 < run.iterates.size()) {
            CHECK(rel >= 1e-6); // no earlier step was below the tolerance
        } else {
            CHECK(rel < 1e-6); // the stopping step is strictly below it
        }
        prev = run.iterates[k];
    }
}

TEST_CASE("objective-gap stop fires when the gap reaches the tolerance") {
    const CompositeProblem prob = half_norm_sq(3);
    SolverConfig cfg;
    cfg.alpha0 = 1.0;
    cfg.max_iter = 100;
    cfg.stop = StopRule::objective_gap(1e-9, 0.0);
    const SolverRun run = run_solver(cfg, prob, {1.0, 2.0, 3.0});
    CHECK(run.stop_reason == StopReason::objective_gap);
    CHECK(run.history.size() == 1); // one exact step to the minimizer
    CHECK(run.last().objective == 0.0);
}

TEST_CASE("stop rule construction validates its inputs") {
    CHECK_THROWS_AS((void)StopRule::iterate_rel_change(0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)StopRule::iterate_rel_change(-1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)StopRule::objective_gap(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(
        (void)StopRule::objective_gap(1e-3, std::numeric_limits<double>::infinity()),
        std::invalid_argument);
    CHECK(StopRule::budget_only().kind == StopRule::Kind::budget_only);
}

TEST_CASE("history csv round-trips the recorded values") {
    const CompositeProblem prob = random_quadratic(10, 4);
    SolverConfig cfg;
    cfg.max_iter = 3;
    const SolverRun run = run_solver(cfg, prob, Vec(4, 1.0));

    std::ostringstream os;
    write_history_csv(os, run, 1.25);
    std::istringstream in(os.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "k,F,gap,alpha,backtracks,time_s");
    std::size_t row = 0;
    while (std::getline(in, line)) {
        REQUIRE(row < run.history.size());
        std::istringstream fields(line);
        std::string tok;
        std::getline(fields, tok, ',');
        CHECK(std::stoi(tok) == run.history[row].k);
        std::getline(fields, tok, ',');
        CHECK(std::stod(tok) == run.history[row].objective);
        std::getline(fields, tok, ',');
        CHECK(std::stod(tok) == run.history[row].objective - 1.25);
        std::getline(fields, tok, ',');
        CHECK(std::stod(tok) == run.history[row].alpha);
        std::getline(fields, tok, ',');
        CHECK(std::stoi(tok) == run.history[row].backtracks);
        ++row;
    }
    CHECK(row == run.history.size());
}
