// Acceptance checks for the composite-optimization library: one pass/fail line
// per criterion, nonzero exit if any criterion fails. Each check is built on
// an oracle independent of the code under test (finite differences, numerical
// minimization, sorting-based projections, hand recursions, rate envelopes).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "vmfb/cli.hpp"
#include "vmfb/experiments.hpp"
#include "vmfb/matrix_io.hpp"
#include "vmfb/metric.hpp"
#include "vmfb/prox.hpp"
#include "vmfb/rng.hpp"
#include "vmfb/solvers.hpp"

using namespace vmfb;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int num, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-34s %s\n", ok ? "PASS" : "FAIL", num, name,
                detail.c_str());
    if (!ok) ++failures;
}

double now_s() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

fs::path cache_dir() {
    return fs::temp_directory_path() / "vmfb_acceptance_cache";
}

Vec random_vec(Rng& rng, std::size_t n, double lo, double hi) {
    Vec x(n);
    for (double& v : x) v = rng.uniform(lo, hi);
    return x;
}

std::shared_ptr<const QuadraticForm> random_quadratic(unsigned seed, std::size_t n,
                                                      double ridge) {
    Rng rng(seed);
    Vec m(n * n);
    for (double& v : m) v = rng.uniform(-1.0, 1.0);
    Vec c(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += m[k * n + i] * m[k * n + j];
            c[i * n + j] = s + (i == j ? ridge : 0.0);
        }
    auto cop = std::make_shared<const DenseOperator>(n, n, std::move(c));
    return std::make_shared<const QuadraticForm>(cop, random_vec(rng, n, -1.0, 1.0));
}

// --------------------------------------------------------------- criterion 1

double central_diff_rel_err(const SmoothObjective& f, const Vec& x) {
    Vec g;
    f.gradient(x, g);
    Vec fd(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double h = 1e-5 * (1.0 + std::abs(x[i]));
        Vec xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        fd[i] = (f.value(xp) - f.value(xm)) / (2.0 * h);
    }
    return norm2(sub(fd, g)) / std::max(1.0, norm2(g));
}

bool criterion_gradients(std::string& detail) {
    const double start = now_s();
    const std::size_t m = 8;
    Rng rng(2024);

    // Periodic blur model on an 8x8 image with integer counts.
    Vec psf(m * m);
    const double c = static_cast<double>(m / 2);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double di = static_cast<double>(i) - c;
            const double dj = static_cast<double>(j) - c;
            psf[i * m + j] = std::exp(-(di * di + dj * dj) / (2.0 * 1.3 * 1.3));
        }
    const double mass = sum(psf);
    for (double& v : psf) v /= mass;
    auto blur = std::make_shared<const CirculantConvolution>(
        CirculantConvolution::from_centered_psf(m, psf));
    Vec counts(m * m);
    for (double& v : counts) v = std::floor(rng.uniform(0.0, 20.0));

    const KullbackLeibler kl(blur, counts, 1.0);
    const HypersurfacePotential hs(m, 0.05);
    const SumObjective composite(std::make_shared<const KullbackLeibler>(kl), 0.045,
                                 std::make_shared<const HypersurfacePotential>(hs));
    const auto quad = random_quadratic(7, 50, 0.1);

    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        worst = std::max(worst, central_diff_rel_err(kl, random_vec(rng, m * m, 0.5, 3.0)));
        worst = std::max(worst, central_diff_rel_err(hs, random_vec(rng, m * m, 0.0, 3.0)));
        worst = std::max(worst,
                         central_diff_rel_err(composite, random_vec(rng, m * m, 0.5, 3.0)));
        worst = std::max(worst, central_diff_rel_err(*quad, random_vec(rng, 50, -2.0, 2.0)));
    }
    const double elapsed = now_s() - start;
    detail = fmt("worst rel err %.2e over 80 points in %.2f s", worst, elapsed);
    return worst < 1e-5 && elapsed < 5.0;
}

// --------------------------------------------------------------- criterion 2

template <typename F>
double golden_min(F f, double lo, double hi) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c1 = b - phi * (b - a), c2 = a + phi * (b - a);
    for (int it = 0; it < 200; ++it) {
        if (f(c1) < f(c2)) {
            b = c2;
        } else {
            a = c1;
        }
        c1 = b - phi * (b - a);
        c2 = a + phi * (b - a);
    }
    return 0.5 * (a + b);
}

Vec simplex_sort_oracle(const Vec& y) {
    Vec s = y;
    std::sort(s.begin(), s.end(), std::greater<double>());
    double cumsum = 0.0, tau = 0.0;
    for (std::size_t j = 0; j < s.size(); ++j) {
        cumsum += s[j];
        const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
        if (s[j] - t > 0.0) tau = t;
    }
    Vec z(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) z[i] = std::max(0.0, y[i] - tau);
    return z;
}

bool criterion_prox(std::string& detail) {
    Rng rng(515);
    const std::size_t n = 8;
    const BoundSchedule sched(3.0, 2.5); // metric entries within [1/2, 2]
    double worst = 0.0;

    const NonsmoothTerm kinds[] = {NonsmoothTerm::zero(), NonsmoothTerm::nonneg(),
                                   NonsmoothTerm::nonneg_l1(0.3)};
    for (int t = 0; t < 50; ++t) {
        const Vec y = random_vec(rng, n, 0.0, 2.0);
        const Vec grad = random_vec(rng, n, -1.0, 1.0);
        const double alpha = rng.uniform(0.1, 1.5);
        const DiagonalMetric d = build_metric(random_vec(rng, n, 0.5, 2.0),
                                              random_vec(rng, n, 0.0, 2.0), sched,
                                              t % 10);
        for (const NonsmoothTerm& g : kinds) {
            const Vec z = scaled_prox(g, y, grad, alpha, d);
            for (std::size_t i = 0; i < n; ++i) {
                const double di = d.entry(i);
                auto q = [&](double zi) {
                    if (g.kind() != NonsmoothTerm::Kind::zero && zi < 0.0) return 1e18;
                    double gz = 0.0;
                    if (g.kind() == NonsmoothTerm::Kind::nonneg_l1)
                        gz = g.l1_weight() * std::abs(zi);
                    const double dz = zi - y[i];
                    return grad[i] * dz + gz + di * dz * dz / (2.0 * alpha);
                };
                double zi = golden_min(q, -10.0, 10.0);
                if (g.kind() != NonsmoothTerm::Kind::zero) zi = std::max(0.0, zi);
                worst = std::max(worst, std::abs(z[i] - zi) / (1.0 + std::abs(zi)));
            }
        }
    }

    double worst_simplex = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t dim = 2 + rng.uniform_index(49);
        const Vec y = random_vec(rng, dim, -2.0, 2.0);
        const Vec got = project_simplex(y);
        const Vec want = simplex_sort_oracle(y);
        for (std::size_t i = 0; i < dim; ++i)
            worst_simplex = std::max(worst_simplex, std::abs(got[i] - want[i]));
    }
    detail = fmt("prox vs minimizer %.2e, simplex vs sort %.2e", worst, worst_simplex);
    return worst < 1e-6 && worst_simplex < 1e-10;
}

// --------------------------------------------------------------- criterion 3

bool criterion_identity_equivalence(std::string& detail) {
    CompositeProblem prob;
    prob.smooth = random_quadratic(99, 20, 0.5);
    prob.nonsmooth = NonsmoothTerm::nonneg_l1(0.05);
    prob.domain = FeasibleSet::nonneg_orthant();
    const Vec x0(20, 0.5);

    SolverConfig scaled;
    scaled.algorithm = Algorithm::sfbem;
    scaled.metric = MetricPolicy::identity;
    scaled.max_iter = 100;
    scaled.record_iterates = true;
    SolverConfig plain = scaled;
    plain.algorithm = Algorithm::fista;

    const SolverRun a = run_solver(scaled, prob, x0);
    const SolverRun b = run_solver(plain, prob, x0);
    if (a.history.size() != b.history.size() || a.iterates.size() != 100) {
        detail = "iteration counts diverged";
        return false;
    }
    double worst = 0.0;
    for (std::size_t k = 0; k < a.iterates.size(); ++k) {
        worst = std::max(worst, norm_inf(sub(a.iterates[k], b.iterates[k])));
        worst = std::max(worst, std::abs(a.history[k].objective - b.history[k].objective));
    }
    detail = fmt("max deviation %.3e over 100 iterations", worst);
    return worst <= 1e-12;
}

// --------------------------------------------------------------- criterion 4

bool slack_and_alpha_ok(const SolverRun& run, double& min_slack) {
    double prev = std::numeric_limits<double>::infinity();
    for (const IterationRecord& r : run.history) {
        min_slack = std::min(min_slack, r.accept_slack);
        if (r.accept_slack < 0.0) return false;
        if (r.alpha > prev * (1.0 + 1e-12)) return false;
        prev = r.alpha;
    }
    return true;
}

bool criterion_backtracking(std::string& detail) {
    double min_slack = std::numeric_limits<double>::infinity();

    // Family desk instances under their production constants.
    const DeblurInstance deb = make_deblur(7, DeblurParams{.side = 32});
    SolverConfig dc = default_config(Experiment::deblur, Algorithm::sfbem);
    dc.max_iter = 200;
    if (!slack_and_alpha_ok(run_solver(dc, deb.problem(), deb.initial_point()),
                            min_slack)) {
        detail = "deblur run violated slack/alpha invariants";
        return false;
    }
    const CsInstance cs = make_cs(7, CsParams{.rows = 100, .cols = 500, .nnz = 5});
    SolverConfig cc = default_config(Experiment::cs, Algorithm::sfbem);
    cc.max_iter = 200;
    if (!slack_and_alpha_ok(run_solver(cc, cs.problem(), cs.initial_point()),
                            min_slack)) {
        detail = "cs run violated slack/alpha invariants";
        return false;
    }
    const DensityInstance den = make_density(7, DensityParams{.n = 200});
    SolverConfig yc = default_config(Experiment::density, Algorithm::sfbem);
    yc.max_iter = 200;
    if (!slack_and_alpha_ok(run_solver(yc, den.problem(), den.initial_point()),
                            min_slack)) {
        detail = "density run violated slack/alpha invariants";
        return false;
    }

    // Known curvature: the step can backtrack but never below delta * eta / L.
    CompositeProblem prob;
    prob.smooth = random_quadratic(31, 30, 0.2);
    prob.nonsmooth = NonsmoothTerm::nonneg();
    prob.domain = FeasibleSet::nonneg_orthant();
    const double lip = *prob.smooth->lipschitz_bound();
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int scaled = 0; scaled < 2; ++scaled) {
        SolverConfig cfg;
        cfg.algorithm = Algorithm::sfbem;
        cfg.alpha0 = 50.0 / lip;
        cfg.max_iter = 100;
        double eta = 1.0;
        if (scaled) {
            cfg.metric = MetricPolicy::split_gradient;
            cfg.bounds = BoundSchedule(10.0, 2.5);
            eta = cfg.bounds->eta();
        }
        const SolverRun run = run_solver(cfg, prob, Vec(30, 1.0));
        const double floor = cfg.backtrack_delta * eta / lip * (1.0 - 1e-10);
        if (!slack_and_alpha_ok(run, min_slack)) {
            detail = "quadratic run violated slack/alpha invariants";
            return false;
        }
        for (const IterationRecord& r : run.history)
            min_ratio = std::min(min_ratio, r.alpha / floor);
    }
    detail = fmt("min slack %.2e, min alpha/floor %.3f", min_slack, min_ratio);
    return min_ratio >= 1.0;
}

// --------------------------------------------------------------- criterion 5

bool criterion_metric_conditions(std::string& detail) {
    const DensityInstance inst = make_density(7, DensityParams{.n = 200});
    SolverConfig cfg = default_config(Experiment::density, Algorithm::sfbem);
    cfg.max_iter = 1000;
    cfg.record_metrics = true;
    const SolverRun run = run_solver(cfg, inst.problem(), inst.initial_point());
    if (run.metric_diagonals.size() != 1000) {
        detail = "expected 1000 recorded metrics";
        return false;
    }
    std::vector<DiagonalMetric> metrics;
    metrics.reserve(run.metric_diagonals.size());
    for (std::size_t k = 0; k < run.metric_diagonals.size(); ++k)
        metrics.emplace_back(run.metric_diagonals[k],
                             cfg.bounds->gamma(static_cast<int>(k)), cfg.bounds->eta());
    const MetricConditionReport rep = verify_sequence_conditions(metrics, *cfg.bounds);
    detail = fmt("max excess %.2e, log tau bound %.4g, stabilization k %.0f",
                 rep.max_excess, rep.log_tau_limit_bound,
                 static_cast<double>(rep.tau_stabilization_k));
    return rep.conditions_pass && rep.tau_stabilization_k >= 0 &&
           std::isfinite(rep.log_tau_limit_bound) && rep.tau_tail_verified;
}

// --------------------------------------------------------------- criterion 6

bool criterion_rate(std::string& detail) {
    const double start = now_s();
    const DensityInstance inst = make_density(7, DensityParams{.n = 200});
    const CompositeProblem prob = inst.problem();
    const Vec x0 = inst.initial_point();

    const ReferenceSolution ref =
        compute_reference(prob, reference_config(Experiment::density, 10000), x0,
                          cache_dir(), inst.cache_key());

    SolverConfig cfg = default_config(Experiment::density, Algorithm::sfbem);
    cfg.max_iter = 1000;
    const SolverRun run = run_solver(cfg, prob, x0);

    const double a = cfg.inertia.a;
    const double denom = std::abs(ref.f_star);
    double c_early = 0.0, c_all = 0.0;
    for (const IterationRecord& r : run.history) {
        if (r.k < 10) continue;
        const double gap_rel = (r.objective - ref.f_star) / denom;
        const double c = gap_rel * (r.k - 1.0 + a) * (r.k - 1.0 + a);
        if (r.k <= 100) c_early = std::max(c_early, c);
        c_all = std::max(c_all, c);
    }
    const double elapsed = now_s() - start;
    detail = fmt("sup gap*(k-1+a)^2: early %.3g, overall %.3g, %.1f s", c_early,
                 c_all, elapsed);
    return c_all <= 3.0 * c_early && c_early > 0.0 && elapsed < 30.0;
}

// --------------------------------------------------------------- criterion 7

// Iterations until the relative gap first drops below tol; INT_MAX when the
// budget never reaches it (the final gap then breaks ties).
struct Speed {
    int iters = std::numeric_limits<int>::max();
    double final_gap = std::numeric_limits<double>::infinity();
};

Speed speed_to_tol(const SolverRun& run, double f_star, double tol) {
    Speed s;
    const double denom = std::abs(f_star);
    for (const IterationRecord& r : run.history) {
        const double gap_rel = (r.objective - f_star) / denom;
        if (gap_rel < tol) {
            s.iters = r.k;
            break;
        }
    }
    if (!run.history.empty())
        s.final_gap = (run.history.back().objective - f_star) / denom;
    return s;
}

bool faster(const Speed& a, const Speed& b) {
    if (a.iters != b.iters) return a.iters < b.iters;
    return a.final_gap < b.final_gap;
}

bool criterion_trends(std::string& detail) {
    const std::vector<std::uint64_t> seeds = {7, 11, 23, 42};
    int deblur_inertial = 0, deblur_scaled = 0, density_inertial = 0;

    for (std::uint64_t seed : seeds) {
        const DeblurInstance inst = make_deblur(seed, DeblurParams{.side = 32});
        const CompositeProblem prob = inst.problem();
        const Vec x0 = inst.initial_point();
        const ReferenceSolution ref =
            compute_reference(prob, reference_config(Experiment::deblur, 4000), x0,
                              cache_dir(), inst.cache_key());
        auto run_alg = [&](Algorithm alg) {
            SolverConfig cfg = default_config(Experiment::deblur, alg);
            cfg.max_iter = 600;
            return speed_to_tol(run_solver(cfg, prob, x0), ref.f_star, 1e-5);
        };
        if (faster(run_alg(Algorithm::sfbem), run_alg(Algorithm::fista)))
            ++deblur_inertial;
        if (faster(run_alg(Algorithm::sgp), run_alg(Algorithm::gp))) ++deblur_scaled;
    }

    for (std::uint64_t seed : seeds) {
        const DensityInstance inst = make_density(seed, DensityParams{.n = 200});
        const CompositeProblem prob = inst.problem();
        const Vec x0 = inst.initial_point();
        const ReferenceSolution ref =
            compute_reference(prob, reference_config(Experiment::density, 8000), x0,
                              cache_dir(), inst.cache_key());
        auto run_alg = [&](Algorithm alg) {
            SolverConfig cfg = default_config(Experiment::density, alg);
            cfg.max_iter = 800;
            return speed_to_tol(run_solver(cfg, prob, x0), ref.f_star, 1e-5);
        };
        if (faster(run_alg(Algorithm::sfbem), run_alg(Algorithm::fista)))
            ++density_inertial;
    }

    detail = fmt("seeds won: deblur scaled-inertial %g/4, deblur scaled-bb %g/4, "
                 "density %g/4",
                 deblur_inertial, deblur_scaled, density_inertial);
    return deblur_inertial >= 3 && deblur_scaled >= 3 && density_inertial >= 3;
}

// --------------------------------------------------------------- criterion 8

bool criterion_reconstruction(std::string& detail) {
    const DeblurInstance inst = make_deblur(7, DeblurParams{.side = 64});
    const double data_rre =
        norm2(sub(inst.counts, inst.x_true)) / norm2(inst.x_true);
    SolverConfig cfg = default_config(Experiment::deblur, Algorithm::sfbem);
    cfg.max_iter = 300;
    const SolverRun run = run_solver(cfg, inst.problem(), inst.initial_point());
    const double rre = norm2(sub(run.x_final, inst.x_true)) / norm2(inst.x_true);
    detail = fmt("final RRE %.4f vs data RRE %.4f", rre, data_rre);
    return rre < data_rre;
}

// --------------------------------------------------------------- criterion 9

std::vector<std::vector<std::string>> csv_cells(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<std::string> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(cell);
        out.push_back(std::move(row));
    }
    return out;
}

bool csv_equal_modulo_time(const fs::path& a, const fs::path& b, std::string& why) {
    const auto ca = csv_cells(a), cb = csv_cells(b);
    if (ca.size() != cb.size()) {
        why = a.filename().string() + ": row counts differ";
        return false;
    }
    std::vector<bool> masked(ca.empty() ? 0 : ca[0].size(), false);
    for (std::size_t j = 0; j < masked.size(); ++j)
        masked[j] = ca[0][j].find("time") != std::string::npos;
    for (std::size_t r = 0; r < ca.size(); ++r) {
        if (ca[r].size() != cb[r].size()) {
            why = a.filename().string() + ": ragged row " + std::to_string(r);
            return false;
        }
        for (std::size_t j = 0; j < ca[r].size(); ++j) {
            if (j < masked.size() && masked[j]) continue;
            if (ca[r][j] != cb[r][j]) {
                why = a.filename().string() + " row " + std::to_string(r) +
                      " col " + std::to_string(j) + ": '" + ca[r][j] + "' vs '" +
                      cb[r][j] + "'";
                return false;
            }
        }
    }
    return true;
}

bool criterion_reproducible_runs(std::string& detail) {
    const fs::path base = fs::temp_directory_path() / "vmfb_acceptance_repro";
    fs::remove_all(base);
    CliOptions opt;
    opt.experiment = "density";
    opt.seed = 13;
    opt.n = 50;
    opt.solvers = {"sfbem", "fista", "bb_fb"};
    opt.max_iter = 80;
    opt.ref_budget = 800;
    opt.out = (base / "a").string();
    if (cmd_compare(opt) != 0) {
        detail = "first compare run failed";
        return false;
    }
    opt.out = (base / "b").string();
    if (cmd_compare(opt) != 0) {
        detail = "second compare run failed";
        return false;
    }

    const std::vector<std::string> files = {
        "history_sfbem.csv", "history_fista.csv", "history_bb_fb.csv",
        "diag_sfbem.csv",    "diag_fista.csv",    "diag_bb_fb.csv",
        "summary.csv",       "figure_gap.csv"};
    for (const std::string& f : files) {
        std::string why;
        if (!csv_equal_modulo_time(base / "a" / f, base / "b" / f, why)) {
            detail = why;
            return false;
        }
    }
    fs::remove_all(base);
    detail = fmt("%g files identical outside time columns",
                 static_cast<double>(files.size()));
    return true;
}

// -------------------------------------------------------------- criterion 10

bool criterion_stopping(std::string& detail) {
    const CsInstance inst = make_cs(7, CsParams{.rows = 100, .cols = 500, .nnz = 5});
    const CompositeProblem prob = inst.problem();
    const Vec x0 = inst.initial_point();
    const double tol = 1e-7;

    SolverConfig cfg = default_config(Experiment::cs, Algorithm::bb_fb);
    cfg.max_iter = 20000;
    cfg.stop = StopRule::iterate_rel_change(tol);
    cfg.record_iterates = true;
    const SolverRun run = run_solver(cfg, prob, x0);
    if (run.stop_reason != StopReason::iterate_rel_change) {
        detail = "stopping rule never fired within the budget";
        return false;
    }

    // Recompute every relative change; the run must end exactly at the first
    // index that drops below the tolerance.
    Vec prev = x0;
    for (std::size_t k = 0; k < run.iterates.size(); ++k) {
        const double rel = norm2(sub(run.iterates[k], prev)) / norm2(prev);
        const bool below = rel < tol;
        const bool last = k + 1 == run.iterates.size();
        if (below != last) {
            detail = fmt("mismatch at iteration %.0f: rel %.3e",
                         static_cast<double>(k + 1), rel);
            return false;
        }
        prev = run.iterates[k];
    }
    detail = fmt("stopped at iteration %.0f of 20000, last rel change %.2e",
                 static_cast<double>(run.history.size()),
                 run.history.back().rel_change);
    return true;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        bool (*fn)(std::string&);
    };
    const Criterion criteria[] = {
        {"gradient oracle", criterion_gradients},
        {"prox oracle", criterion_prox},
        {"identity-metric equivalence", criterion_identity_equivalence},
        {"backtracking invariants", criterion_backtracking},
        {"metric sequence conditions", criterion_metric_conditions},
        {"inertial rate envelope", criterion_rate},
        {"cross-solver trends", criterion_trends},
        {"reconstruction improves on data", criterion_reconstruction},
        {"reproducible benchmark runs", criterion_reproducible_runs},
        {"stopping rule exactness", criterion_stopping},
    };
    int num = 0;
    for (const Criterion& c : criteria) {
        ++num;
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        report(num, c.name, ok, detail);
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
