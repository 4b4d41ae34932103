#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vmfb/metric.hpp"
#include "vmfb/problem.hpp"

namespace vmfb {

/// Inertial parameter family theta_k = a/(k+a) (theta_0 = 1) and
/// beta_k = (k-1)/(k+a) (beta_0 = 0), a >= 2. These satisfy the coupled
/// recursion inequalities that give the O(1/k^2) objective rate; a > 2 also
/// yields convergence of the iterates.
struct InertiaSchedule {
    double a = 2.1;

    explicit InertiaSchedule(double a_ = 2.1);

    double theta(int k) const;
    double beta(int k) const;
};

enum class Algorithm {
    sfbem, // scaled inertial forward-backward with backtracking
    fista, // standalone Euclidean inertial forward-backward (reference path)
    gp,    // gradient projection with Armijo line search along the arc
    sgp,   // scaled gradient projection (gp + split-gradient metric + BB steps)
    bb_fb  // forward-backward with Barzilai-Borwein steps and a nonmonotone
           // acceptance test
};

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

enum class MetricPolicy {
    identity,      // D_k = I throughout
    split_gradient // D_k from the gradient split at the current weight point
};

/// Stopping rule evaluated after every iteration (in addition to the
/// iteration budget).
struct StopRule {
    enum class Kind { budget_only, iterate_rel_change, objective_gap };

    Kind kind = Kind::budget_only;
    double tol = 0.0;
    double f_star = 0.0; // reference objective for objective_gap

    static StopRule budget_only() { return {}; }
    static StopRule iterate_rel_change(double tol);
    static StopRule objective_gap(double tol, double f_star);
};

struct SolverConfig {
    Algorithm algorithm = Algorithm::sfbem;
    double alpha0 = 1.0;           // initial step size
    double backtrack_delta = 0.5;  // step shrink factor, in (0, 1)
    InertiaSchedule inertia{};     // sfbem / fista
    MetricPolicy metric = MetricPolicy::identity;
    std::optional<BoundSchedule> bounds; // required when metric == split_gradient
    int max_iter = 1000;
    StopRule stop = StopRule::budget_only();
    bool bb_enabled = true;    // bb_fb only: Barzilai-Borwein step proposal
    bool record_iterates = false;
    bool record_metrics = false;
};

/// One row per completed iteration; k is the 1-based iterate index.
struct IterationRecord {
    int k = 0;
    double objective = 0.0; // F(x^k) = f(x^k) + g(x^k)
    double alpha = 0.0;     // step size used to produce x^k
    int backtracks = 0;     // shrink/line-search trials at this iteration
    double gamma = 1.0;     // metric bound gamma_k in effect
    double rel_change = 0.0;   // ||x^k - x^{k-1}|| / ||x^{k-1}||
    double accept_slack = 0.0; // margin of the step acceptance test (>= 0)
    double time_s = 0.0;       // wall time since the solve started
};

enum class StopReason { budget_exhausted, iterate_rel_change, objective_gap };

struct SolverRun {
    std::vector<IterationRecord> history;
    Vec x_final;
    StopReason stop_reason = StopReason::budget_exhausted;
    std::vector<Vec> iterates;          // when record_iterates
    std::vector<Vec> metric_diagonals;  // when record_metrics

    const IterationRecord& last() const { return history.back(); }
};

/// Runs the configured algorithm from x0. Throws std::invalid_argument on a
/// malformed configuration or infeasible x0, numerical_failure when step
/// acceptance cannot be satisfied or the objective leaves the floating range.
SolverRun run_solver(const SolverConfig& config, const CompositeProblem& problem,
                     const Vec& x0);

/// Writes the iteration history as CSV with header k,F,gap,alpha,backtracks,time_s
/// where gap = F(x^k) - f_star.
void write_history_csv(std::ostream& os, const SolverRun& run, double f_star);

} // namespace vmfb
