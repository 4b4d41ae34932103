#include "vmfb/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "vmfb/errors.hpp"

namespace vmfb {

namespace {
constexpr int kMaxBacktracks = 100;
constexpr int kMaxLineSearch = 50;
constexpr double kArmijoSigma = 1e-4;
constexpr double kNonmonotoneSigma = 0.1;
constexpr std::size_t kNonmonotoneWindow = 10;
constexpr double kBbMin = 1e-10;
constexpr double kBbMax = 1e10;
} // namespace

// -------------------------------------------------------------- InertiaSchedule

InertiaSchedule::InertiaSchedule(double a_) : a(a_) {
    if (!(a >= 2.0) || !std::isfinite(a))
        throw std::invalid_argument("InertiaSchedule: a must be finite and >= 2");
}

double InertiaSchedule::theta(int k) const {
    if (k < 0) throw std::invalid_argument("InertiaSchedule::theta: k < 0");
    if (k == 0) return 1.0;
    return a / (static_cast<double>(k) + a);
}

double InertiaSchedule::beta(int k) const {
    if (k < 0) throw std::invalid_argument("InertiaSchedule::beta: k < 0");
    if (k == 0) return 0.0;
    return (static_cast<double>(k) - 1.0) / (static_cast<double>(k) + a);
}

// --------------------------------------------------------------------- StopRule

StopRule StopRule::iterate_rel_change(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("StopRule: tolerance must be > 0");
    StopRule r;
    r.kind = Kind::iterate_rel_change;
    r.tol = tol;
    return r;
}

StopRule StopRule::objective_gap(double tol, double f_star) {
    if (!(tol > 0.0) || !std::isfinite(tol))
        throw std::invalid_argument("StopRule: tolerance must be > 0");
    if (!std::isfinite(f_star))
        throw std::invalid_argument("StopRule: reference objective must be finite");
    StopRule r;
    r.kind = Kind::objective_gap;
    r.tol = tol;
    r.f_star = f_star;
    return r;
}

// -------------------------------------------------------------- algorithm names

std::string algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::sfbem: return "sfbem";
    case Algorithm::fista: return "fista";
    case Algorithm::gp: return "gp";
    case Algorithm::sgp: return "sgp";
    case Algorithm::bb_fb: return "bb_fb";
    }
    throw std::invalid_argument("algorithm_name: unknown algorithm");
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "sfbem") return Algorithm::sfbem;
    if (name == "fista") return Algorithm::fista;
    if (name == "gp") return Algorithm::gp;
    if (name == "sgp") return Algorithm::sgp;
    if (name == "bb_fb") return Algorithm::bb_fb;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

// --------------------------------------------------------------------- steppers

namespace {

struct StepResult {
    Vec x;
    double f_smooth = 0.0; // f(x), reused for the objective record
    double alpha = 0.0;
    int backtracks = 0;
    double gamma = 1.0;
    double accept_slack = 0.0;
    std::optional<DiagonalMetric> metric;
};

class Stepper {
public:
    virtual ~Stepper() = default;
    virtual StepResult step(int k) = 0;
};

double clip_bb(double v) { return std::min(kBbMax, std::max(kBbMin, v)); }

/// Round-off allowance for sufficient-decrease tests. Objective values are
/// sums of many terms and carry noise of a few ulps; once a solver reaches
/// the double-precision plateau an exact comparison can fail forever on a
/// ~1e-13 relative discrepancy no matter how small the step gets.
double fp_noise(double scale) { return 1e-12 * std::max(1.0, std::abs(scale)); }

/// Builds the split-gradient metric at weights w (negative entries zeroed:
/// extrapolated points may leave the orthant when Y is the whole space).
DiagonalMetric split_metric(const SmoothObjective& f, const Vec& w,
                            const BoundSchedule& bounds, int k) {
    Vec wt = clamp_nonneg(w);
    Vec u, v;
    f.split_gradient(wt, u, v);
    return build_metric(v, wt, bounds, k);
}

/// Scaled inertial forward-backward step with monotone backtracking on the
/// quadratic upper model in the metric norm.
class ScaledInertialStepper final : public Stepper {
public:
    ScaledInertialStepper(const SolverConfig& cfg, const CompositeProblem& prob,
                          const Vec& x0)
        : cfg_(cfg), prob_(prob), x_prev_(x0), x_cur_(x0), alpha_(cfg.alpha0) {}

    StepResult step(int k) override {
        const double beta = cfg_.inertia.beta(k);
        const std::size_t n = x_cur_.size();
        Vec y(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double diff = x_cur_[i] - x_prev_[i];
            y[i] = x_cur_[i] + beta * diff;
        }

        // For the supported sets (whole space, nonnegative orthant) the
        // projection is separable and does not depend on the diagonal metric,
        // so it can be taken first and the metric built at the projected point.
        y = scaled_projection(prob_.domain, y, DiagonalMetric::identity(n));
        DiagonalMetric metric = cfg_.metric == MetricPolicy::split_gradient
                                    ? split_metric(*prob_.smooth, y, *cfg_.bounds, k)
                                    : DiagonalMetric::identity(n);

        const double f_y = prob_.smooth->value(y);
        Vec grad;
        prob_.smooth->gradient(y, grad);

        const double alpha_start = alpha_;
        StepResult res;
        int trials = 0;
        for (;;) {
            const double alpha_try = std::pow(cfg_.backtrack_delta, trials) * alpha_start;
            Vec x_next = scaled_prox(prob_.nonsmooth, y, grad, alpha_try, metric);
            const double f_next = prob_.smooth->value(x_next);
            Vec diff = sub(x_next, y);
            const double rhs = f_y + dot(grad, diff) +
                               0.5 / alpha_try * metric.weighted_norm_sq(diff) +
                               fp_noise(f_y);
            if (f_next <= rhs) {
                res.x = std::move(x_next);
                res.f_smooth = f_next;
                res.alpha = alpha_try;
                res.backtracks = trials;
                res.accept_slack = rhs - f_next;
                break;
            }
            ++trials;
            if (trials > kMaxBacktracks)
                throw numerical_failure("backtracking failed after " +
                                        std::to_string(kMaxBacktracks) + " reductions");
        }

        alpha_ = res.alpha;
        res.gamma = metric.gamma();
        res.metric = std::move(metric);
        x_prev_ = std::move(x_cur_);
        x_cur_ = res.x;
        return res;
    }

private:
    const SolverConfig& cfg_;
    const CompositeProblem& prob_;
    Vec x_prev_, x_cur_;
    double alpha_;
};

/// Standalone Euclidean inertial forward-backward (reference implementation):
/// deliberately shares no step arithmetic with the scaled engine so the two
/// can be checked against each other.
class EuclideanInertialStepper final : public Stepper {
public:
    EuclideanInertialStepper(const SolverConfig& cfg, const CompositeProblem& prob,
                             const Vec& x0)
        : cfg_(cfg), prob_(prob), x_prev_(x0), x_cur_(x0), alpha_(cfg.alpha0) {}

    StepResult step(int k) override {
        const double beta = cfg_.inertia.beta(k);
        const std::size_t n = x_cur_.size();
        Vec y(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double diff = x_cur_[i] - x_prev_[i];
            y[i] = x_cur_[i] + beta * diff;
        }
        if (prob_.domain.kind() == FeasibleSet::Kind::nonneg_orthant)
            for (double& v : y)
                if (v < 0.0) v = 0.0;

        const double f_y = prob_.smooth->value(y);
        Vec grad;
        prob_.smooth->gradient(y, grad);

        const double alpha_start = alpha_;
        StepResult res;
        int trials = 0;
        for (;;) {
            const double alpha_try = std::pow(cfg_.backtrack_delta, trials) * alpha_start;
            Vec x_next = prox_step(y, grad, alpha_try);
            const double f_next = prob_.smooth->value(x_next);
            double lin = 0.0, sq = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = x_next[i] - y[i];
                lin += grad[i] * d;
                sq += d * d;
            }
            const double rhs = f_y + lin + 0.5 / alpha_try * sq + fp_noise(f_y);
            if (f_next <= rhs) {
                res.x = std::move(x_next);
                res.f_smooth = f_next;
                res.alpha = alpha_try;
                res.backtracks = trials;
                res.accept_slack = rhs - f_next;
                break;
            }
            ++trials;
            if (trials > kMaxBacktracks)
                throw numerical_failure("backtracking failed after " +
                                        std::to_string(kMaxBacktracks) + " reductions");
        }

        alpha_ = res.alpha;
        x_prev_ = std::move(x_cur_);
        x_cur_ = res.x;
        return res;
    }

private:
    Vec prox_step(const Vec& y, const Vec& grad, double alpha) const {
        const std::size_t n = y.size();
        Vec u(n);
        for (std::size_t i = 0; i < n; ++i) u[i] = y[i] - alpha * grad[i];
        switch (prob_.nonsmooth.kind()) {
        case NonsmoothTerm::Kind::zero:
            return u;
        case NonsmoothTerm::Kind::nonneg:
            for (double& v : u)
                if (v < 0.0) v = 0.0;
            return u;
        case NonsmoothTerm::Kind::nonneg_l1: {
            const double shift = alpha * prob_.nonsmooth.l1_weight();
            for (double& v : u) {
                v -= shift;
                if (v < 0.0) v = 0.0;
            }
            return u;
        }
        case NonsmoothTerm::Kind::simplex:
            return project_simplex(u);
        }
        throw not_implemented("prox_step: unsupported nonsmooth kind");
    }

    const SolverConfig& cfg_;
    const CompositeProblem& prob_;
    Vec x_prev_, x_cur_;
    double alpha_;
};

/// (Scaled) gradient projection: prox step along the arc followed by an
/// Armijo line search on the segment, with alternating Barzilai-Borwein step
/// proposals in the metric induced by the current scaling.
class GradientProjectionStepper final : public Stepper {
public:
    GradientProjectionStepper(const SolverConfig& cfg, const CompositeProblem& prob,
                              const Vec& x0)
        : cfg_(cfg), prob_(prob), x_cur_(x0), alpha_(cfg.alpha0) {
        f_cur_ = prob_.smooth->value(x_cur_);
        prob_.smooth->gradient(x_cur_, grad_cur_);
    }

    StepResult step(int k) override {
        const std::size_t n = x_cur_.size();
        DiagonalMetric metric = cfg_.metric == MetricPolicy::split_gradient
                                    ? split_metric(*prob_.smooth, x_cur_, *cfg_.bounds, k)
                                    : DiagonalMetric::identity(n);
        if (have_pair_) alpha_ = bb_step(metric);

        const Vec z = scaled_prox(prob_.nonsmooth, x_cur_, grad_cur_, alpha_, metric);
        const Vec dir = sub(z, x_cur_);
        const double g_z = prob_.nonsmooth.value(z);
        const double g_x = prob_.nonsmooth.value(x_cur_);
        const double decrease = dot(grad_cur_, dir) + g_z - g_x;
        const double f_comp_cur = f_cur_ + g_x;

        double lambda = 1.0;
        int trials = 0;
        Vec x_next;
        double f_next = 0.0, slack = 0.0;
        for (;;) {
            x_next = add_scaled(x_cur_, lambda, dir);
            f_next = prob_.smooth->value(x_next);
            const double threshold =
                f_comp_cur + kArmijoSigma * lambda * decrease + fp_noise(f_comp_cur);
            const double f_comp_next = f_next + prob_.nonsmooth.value(x_next);
            if (f_comp_next <= threshold) {
                slack = threshold - f_comp_next;
                break;
            }
            lambda *= 0.5;
            ++trials;
            if (trials > kMaxLineSearch)
                throw numerical_failure("Armijo line search failed after " +
                                        std::to_string(kMaxLineSearch) + " halvings");
        }

        Vec grad_next;
        prob_.smooth->gradient(x_next, grad_next);
        s_ = sub(x_next, x_cur_);
        v_ = sub(grad_next, grad_cur_);
        have_pair_ = true;

        StepResult res;
        res.x = x_next;
        res.f_smooth = f_next;
        res.alpha = alpha_;
        res.backtracks = trials;
        res.gamma = metric.gamma();
        res.accept_slack = slack;
        res.metric = std::move(metric);
        x_cur_ = std::move(x_next);
        f_cur_ = f_next;
        grad_cur_ = std::move(grad_next);
        return res;
    }

private:
    /// Barzilai-Borwein steplengths for the scaled step x+ = P(x - a D^{-1} g):
    /// the secant conditions on B(a) = (a D^{-1})^{-1} give
    /// BB1 = s^T D^2 s / s^T D v and BB2 = s^T D^{-1} v / v^T D^{-2} v,
    /// with D the metric (its inverse is the gradient scaling).
    double bb_step(const DiagonalMetric& d) const {
        double num1 = 0.0, den1 = 0.0, num2 = 0.0, den2 = 0.0;
        for (std::size_t i = 0; i < s_.size(); ++i) {
            const double di = d.entry(i);
            num1 += s_[i] * s_[i] * di * di;
            den1 += s_[i] * v_[i] * di;
            num2 += s_[i] * v_[i] / di;
            den2 += v_[i] * v_[i] / (di * di);
        }
        const double bb1 = den1 > 0.0 ? clip_bb(num1 / den1) : kBbMax;
        const double bb2 = num2 > 0.0 && den2 > 0.0 ? clip_bb(num2 / den2) : kBbMax;
        // Alternation: prefer the smaller BB2 step when it is substantially
        // shorter than BB1, otherwise take BB1.
        return bb2 / bb1 < 0.5 ? bb2 : bb1;
    }

    const SolverConfig& cfg_;
    const CompositeProblem& prob_;
    Vec x_cur_, grad_cur_;
    double f_cur_;
    double alpha_;
    Vec s_, v_;
    bool have_pair_ = false;
};

/// Forward-backward with Barzilai-Borwein step proposals and a nonmonotone
/// acceptance test against the worst of the last few objective values.
class BarzilaiBorweinStepper final : public Stepper {
public:
    BarzilaiBorweinStepper(const SolverConfig& cfg, const CompositeProblem& prob,
                           const Vec& x0)
        : cfg_(cfg), prob_(prob), x_cur_(x0), alpha_(cfg.alpha0) {
        f_cur_ = prob_.smooth->value(x_cur_);
        prob_.smooth->gradient(x_cur_, grad_cur_);
        window_.push_back(f_cur_ + prob_.nonsmooth.value(x_cur_));
    }

    StepResult step(int) override {
        if (cfg_.bb_enabled && have_pair_) {
            const double den = dot(s_, v_);
            alpha_ = den > 0.0 ? clip_bb(dot(s_, s_) / den) : kBbMax;
        }
        const DiagonalMetric ident = DiagonalMetric::identity(x_cur_.size());
        const double f_ref = *std::max_element(window_.begin(), window_.end());

        int trials = 0;
        StepResult res;
        for (;;) {
            Vec x_next = scaled_prox(prob_.nonsmooth, x_cur_, grad_cur_, alpha_, ident);
            const double f_next = prob_.smooth->value(x_next);
            const double f_comp = f_next + prob_.nonsmooth.value(x_next);
            const double move = norm2_sq(sub(x_next, x_cur_));
            const double threshold =
                f_ref - kNonmonotoneSigma / (2.0 * alpha_) * move + fp_noise(f_ref);
            if (f_comp <= threshold) {
                res.x = std::move(x_next);
                res.f_smooth = f_next;
                res.alpha = alpha_;
                res.backtracks = trials;
                res.accept_slack = threshold - f_comp;
                window_.push_back(f_comp);
                if (window_.size() > kNonmonotoneWindow) window_.pop_front();
                break;
            }
            alpha_ *= 0.5;
            ++trials;
            if (trials > kMaxLineSearch)
                throw numerical_failure("nonmonotone acceptance failed after " +
                                        std::to_string(kMaxLineSearch) + " halvings");
        }

        Vec grad_next;
        prob_.smooth->gradient(res.x, grad_next);
        s_ = sub(res.x, x_cur_);
        v_ = sub(grad_next, grad_cur_);
        have_pair_ = true;
        x_cur_ = res.x;
        f_cur_ = res.f_smooth;
        grad_cur_ = std::move(grad_next);
        return res;
    }

private:
    const SolverConfig& cfg_;
    const CompositeProblem& prob_;
    Vec x_cur_, grad_cur_;
    double f_cur_;
    double alpha_;
    Vec s_, v_;
    bool have_pair_ = false;
    std::deque<double> window_;
};

std::unique_ptr<Stepper> make_stepper(const SolverConfig& cfg,
                                      const CompositeProblem& prob, const Vec& x0) {
    switch (cfg.algorithm) {
    case Algorithm::sfbem:
        return std::make_unique<ScaledInertialStepper>(cfg, prob, x0);
    case Algorithm::fista:
        return std::make_unique<EuclideanInertialStepper>(cfg, prob, x0);
    case Algorithm::gp:
    case Algorithm::sgp:
        return std::make_unique<GradientProjectionStepper>(cfg, prob, x0);
    case Algorithm::bb_fb:
        return std::make_unique<BarzilaiBorweinStepper>(cfg, prob, x0);
    }
    throw std::invalid_argument("make_stepper: unknown algorithm");
}

void validate(const SolverConfig& cfg, const CompositeProblem& prob, const Vec& x0) {
    if (!prob.smooth) throw std::invalid_argument("run_solver: null smooth objective");
    if (x0.size() != prob.dim())
        throw std::invalid_argument("run_solver: x0 has dimension " +
                                    std::to_string(x0.size()) + ", problem expects " +
                                    std::to_string(prob.dim()));
    if (!(cfg.alpha0 > 0.0) || !std::isfinite(cfg.alpha0))
        throw std::invalid_argument("run_solver: alpha0 must be finite and > 0");
    if (!(cfg.backtrack_delta > 0.0) || !(cfg.backtrack_delta < 1.0))
        throw std::invalid_argument("run_solver: backtrack delta must lie in (0, 1)");
    if (cfg.max_iter < 0)
        throw std::invalid_argument("run_solver: max_iter must be >= 0");
    if (cfg.metric == MetricPolicy::split_gradient && !cfg.bounds)
        throw std::invalid_argument("run_solver: split-gradient metric needs a bound "
                                    "schedule");
    if (cfg.algorithm == Algorithm::gp && cfg.metric != MetricPolicy::identity)
        throw std::invalid_argument("run_solver: gp uses the identity metric");
    if (cfg.algorithm == Algorithm::fista && cfg.metric != MetricPolicy::identity)
        throw std::invalid_argument("run_solver: fista uses the identity metric");
    if (cfg.algorithm == Algorithm::bb_fb && cfg.metric != MetricPolicy::identity)
        throw std::invalid_argument("run_solver: bb_fb uses the identity metric");
    if (!prob.domain.contains(x0))
        throw std::invalid_argument("run_solver: x0 is outside the feasible set");
    if (!prob.nonsmooth.feasible(x0))
        throw std::invalid_argument("run_solver: x0 is outside dom g");
}

} // namespace

// ------------------------------------------------------------------- run_solver

SolverRun run_solver(const SolverConfig& config, const CompositeProblem& problem,
                     const Vec& x0) {
    validate(config, problem, x0);

    SolverRun out;
    out.x_final = x0;
    if (config.max_iter == 0) return out;

    auto stepper = make_stepper(config, problem, x0);
    const auto t0 = std::chrono::steady_clock::now();
    Vec prev = x0;
    out.history.reserve(static_cast<std::size_t>(config.max_iter));

    for (int k = 0; k < config.max_iter; ++k) {
        StepResult res = stepper->step(k);
        const double objective = res.f_smooth + problem.nonsmooth.value(res.x);
        if (!std::isfinite(objective))
            throw numerical_failure("objective became non-finite at iteration " +
                                    std::to_string(k + 1));

        const double denom = norm2(prev);
        const double move = norm2(sub(res.x, prev));
        const double rel = denom > 0.0 ? move / denom : move;

        IterationRecord rec;
        rec.k = k + 1;
        rec.objective = objective;
        rec.alpha = res.alpha;
        rec.backtracks = res.backtracks;
        rec.gamma = res.gamma;
        rec.rel_change = rel;
        rec.accept_slack = res.accept_slack;
        rec.time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                         .count();
        out.history.push_back(rec);

        if (config.record_iterates) out.iterates.push_back(res.x);
        if (config.record_metrics)
            out.metric_diagonals.push_back(res.metric ? res.metric->diagonal()
                                                      : Vec(res.x.size(), 1.0));

        prev = std::move(res.x);

        if (config.stop.kind == StopRule::Kind::iterate_rel_change &&
            rel < config.stop.tol) {
            out.stop_reason = StopReason::iterate_rel_change;
            break;
        }
        if (config.stop.kind == StopRule::Kind::objective_gap) {
            const double denom_gap =
                config.stop.f_star != 0.0 ? std::abs(config.stop.f_star) : 1.0;
            if ((objective - config.stop.f_star) / denom_gap <= config.stop.tol) {
                out.stop_reason = StopReason::objective_gap;
                break;
            }
        }
    }

    out.x_final = std::move(prev);
    return out;
}

void write_history_csv(std::ostream& os, const SolverRun& run, double f_star) {
    os << "k,F,gap,alpha,backtracks,time_s\n";
    char buf[256];
    for (const IterationRecord& r : run.history) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%d,%.6f\n", r.k,
                      r.objective, r.objective - f_star, r.alpha, r.backtracks,
                      r.time_s);
        os << buf;
    }
}

} // namespace vmfb
