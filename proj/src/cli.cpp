#include "vmfb/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "vmfb/errors.hpp"
#include "vmfb/experiments.hpp"
#include "vmfb/matrix_io.hpp"

namespace vmfb {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_time(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// ------------------------------------------------------------- CSV utilities

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    int column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }
};

CsvTable read_csv(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    CsvTable t;
    std::string line;
    if (!std::getline(f, line))
        throw std::runtime_error("empty CSV " + path.string());
    std::stringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.header.push_back(cell);
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream rs(line);
        while (std::getline(rs, cell, ','))
            row.push_back(cell.empty() ? kNan : std::stod(cell));
        if (row.size() != t.header.size())
            throw std::runtime_error("ragged CSV row in " + path.string());
        t.rows.push_back(std::move(row));
    }
    return t;
}

// --------------------------------------------------------- instance plumbing

struct ResolvedInstance {
    Experiment family = Experiment::density;
    CompositeProblem problem;
    Vec x0;
    Vec x_true; // empty when no ground truth exists (density)
    std::string key;
    double data_rre = kNan; // deblur: RRE of the raw counts
    json manifest;          // sizes and constants actually used
    // Raw arrays for cmd_generate.
    std::vector<std::pair<std::string, MatrixFile>> files;
};

ResolvedInstance build_instance(const CliOptions& opt) {
    ResolvedInstance out;
    out.family = experiment_from_name(opt.experiment);

    switch (out.family) {
    case Experiment::deblur: {
        DeblurParams p;
        if (opt.m != 0) p.side = opt.m;
        p.blobs = opt.blobs;
        if (opt.rho >= 0.0) p.tv_weight = opt.rho;
        DeblurInstance inst = make_deblur(opt.seed, p);
        out.problem = inst.problem();
        out.x0 = inst.initial_point();
        out.x_true = inst.x_true;
        out.key = inst.cache_key();
        out.data_rre = norm2(sub(inst.counts, inst.x_true)) / norm2(inst.x_true);
        out.manifest = {{"m", p.side},
                        {"blobs", p.blobs},
                        {"rho", p.tv_weight},
                        {"hs_delta", p.tv_smoothing},
                        {"bg", p.background},
                        {"psf_sigma", p.psf_sigma}};
        const auto side = static_cast<std::uint32_t>(p.side);
        out.files.emplace_back("x_true.bin", MatrixFile{side, side, inst.x_true});
        out.files.emplace_back("psf.bin", MatrixFile{side, side, inst.psf});
        out.files.emplace_back("counts.bin", MatrixFile{side, side, inst.counts});
        break;
    }
    case Experiment::cs: {
        CsParams p;
        if (opt.m != 0) p.rows = opt.m;
        if (opt.n != 0) p.cols = opt.n;
        if (opt.s != 0) p.nnz = opt.s;
        if (opt.rho >= 0.0) p.l1_weight = opt.rho;
        CsInstance inst = make_cs(opt.seed, p);
        out.problem = inst.problem();
        out.x0 = inst.initial_point();
        out.x_true = inst.x_true;
        out.key = inst.cache_key();
        out.manifest = {{"m", p.rows},
                        {"n", p.cols},
                        {"s", p.nnz},
                        {"rho", p.l1_weight},
                        {"bg", p.background},
                        {"column_sum", p.column_sum}};
        out.files.emplace_back("sensing.bin",
                               MatrixFile{static_cast<std::uint32_t>(p.rows),
                                          static_cast<std::uint32_t>(p.cols),
                                          inst.sensing->data()});
        out.files.emplace_back(
            "x_true.bin",
            MatrixFile{1, static_cast<std::uint32_t>(p.cols), inst.x_true});
        out.files.emplace_back(
            "counts.bin",
            MatrixFile{1, static_cast<std::uint32_t>(p.rows), inst.counts});
        break;
    }
    case Experiment::density: {
        DensityParams p;
        if (opt.n != 0) p.n = opt.n;
        if (opt.rho >= 0.0)
            throw std::invalid_argument("--rho does not apply to the density "
                                        "experiment");
        DensityInstance inst = make_density(opt.seed, p);
        out.problem = inst.problem();
        out.x0 = inst.initial_point();
        out.key = inst.cache_key();
        out.manifest = {{"n", p.n},
                        {"sigma", p.kernel_width},
                        {"sigma_is_variance", p.width_is_variance}};
        out.files.emplace_back(
            "samples.bin",
            MatrixFile{1, static_cast<std::uint32_t>(p.n), inst.samples});
        break;
    }
    }
    return out;
}

fs::path resolve_out_dir(const CliOptions& opt) {
    if (!opt.out.empty()) return fs::path(opt.out);
    return fs::path("vmfb_" + opt.experiment + "_seed" + std::to_string(opt.seed));
}

SolverConfig solver_config(const CliOptions& opt, Experiment family, Algorithm alg) {
    SolverConfig cfg = default_config(family, alg);
    if (opt.a > 0.0) cfg.inertia = InertiaSchedule(opt.a);
    if (opt.alpha0 > 0.0) cfg.alpha0 = opt.alpha0;
    if (opt.delta > 0.0) cfg.backtrack_delta = opt.delta;
    cfg.max_iter = opt.max_iter;
    if (cfg.metric == MetricPolicy::split_gradient) {
        double b = cfg.bounds->b();
        double p = cfg.bounds->p();
        if (opt.bound_b > 0.0) b = opt.bound_b;
        if (opt.bound_p > 0.0) p = opt.bound_p;
        cfg.bounds = BoundSchedule(b, p);
    }
    if (opt.tol > 0.0) cfg.stop = StopRule::iterate_rel_change(opt.tol);
    return cfg;
}

json config_to_json(const SolverConfig& cfg) {
    json j;
    j["algorithm"] = algorithm_name(cfg.algorithm);
    j["a"] = cfg.inertia.a;
    j["alpha0"] = cfg.alpha0;
    j["delta"] = cfg.backtrack_delta;
    j["max_iter"] = cfg.max_iter;
    j["metric"] = cfg.metric == MetricPolicy::split_gradient ? "split_gradient"
                                                             : "identity";
    if (cfg.bounds) {
        j["bound_b"] = cfg.bounds->b();
        j["bound_p"] = cfg.bounds->p();
    }
    if (cfg.stop.kind == StopRule::Kind::iterate_rel_change)
        j["tol"] = cfg.stop.tol;
    return j;
}

void write_text(const fs::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    f << content;
    if (!f) throw std::runtime_error("write failed for " + path.string());
}

} // namespace

// ------------------------------------------------------------------- generate

int cmd_generate(const CliOptions& opt) {
    ResolvedInstance inst = build_instance(opt);
    const fs::path dir = resolve_out_dir(opt);
    fs::create_directories(dir);

    json manifest;
    manifest["experiment"] = opt.experiment;
    manifest["seed"] = opt.seed;
    manifest["instance"] = inst.manifest;
    manifest["instance_key"] = inst.key;
    json files = json::array();
    for (const auto& [name, mf] : inst.files) {
        save_matrix(dir / name, mf.rows, mf.cols, mf.data);
        files.push_back(name);
    }
    manifest["files"] = files;
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << (inst.files.size() + 1) << " files to " << dir.string()
              << "\n";
    return 0;
}

// -------------------------------------------------------------------- compare

namespace {

struct SolverOutcome {
    std::string name;
    bool ok = false;
    std::string error;
    SolverRun run;
    MetricsReport metrics;
};

void write_history(const fs::path& path, const SolverRun& run, double f_star) {
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    write_history_csv(f, run, f_star);
    if (!f) throw std::runtime_error("write failed for " + path.string());
}

void write_diagnostics(const fs::path& path, const SolverRun& run) {
    std::string text = "k,gamma,rel_change,accept_slack\n";
    for (const IterationRecord& r : run.history) {
        text += std::to_string(r.k);
        text += ',';
        text += fmt(r.gamma);
        text += ',';
        text += fmt(r.rel_change);
        text += ',';
        text += fmt(r.accept_slack);
        text += '\n';
    }
    write_text(path, text);
}

} // namespace

int cmd_compare(const CliOptions& opt) {
    ResolvedInstance inst = build_instance(opt);
    const fs::path dir = resolve_out_dir(opt);
    fs::create_directories(dir);

    std::vector<Algorithm> algos;
    for (const std::string& name : opt.solvers) algos.push_back(algorithm_from_name(name));
    if (algos.empty()) throw std::invalid_argument("no solvers requested");

    const int ref_budget = opt.ref_budget > 0 ? opt.ref_budget : 10 * opt.max_iter;
    const SolverConfig ref_cfg = reference_config(inst.family, ref_budget);
    const ReferenceSolution ref =
        compute_reference(inst.problem, ref_cfg, inst.x0, dir / "ref_cache", inst.key);

    json manifest;
    manifest["experiment"] = opt.experiment;
    manifest["seed"] = opt.seed;
    manifest["instance"] = inst.manifest;
    manifest["instance_key"] = inst.key;
    manifest["reference"] = {{"algorithm", algorithm_name(ref_cfg.algorithm)},
                             {"budget", ref_budget},
                             {"f_star", ref.f_star},
                             {"from_cache", ref.from_cache}};
    if (std::isfinite(inst.data_rre)) manifest["data_rre"] = inst.data_rre;

    // Record full iterates only when the memory footprint stays modest; the
    // per-tolerance RME/RRE columns degrade to NaN otherwise.
    const bool record_iterates =
        inst.problem.dim() * static_cast<std::size_t>(opt.max_iter) <= 8'000'000;

    std::vector<SolverOutcome> outcomes;
    json solver_block;
    for (std::size_t i = 0; i < algos.size(); ++i) {
        SolverOutcome oc;
        oc.name = opt.solvers[i];
        SolverConfig cfg = solver_config(opt, inst.family, algos[i]);
        cfg.record_iterates = record_iterates;
        cfg.record_metrics = algos[i] == Algorithm::sfbem &&
                             cfg.metric == MetricPolicy::split_gradient;
        solver_block[oc.name] = config_to_json(cfg);
        try {
            oc.run = run_solver(cfg, inst.problem, inst.x0);
            oc.metrics = evaluate(oc.run, ref.f_star, ref.x_star, inst.x_true);
            oc.ok = true;
        } catch (const std::exception& e) {
            oc.error = e.what();
            std::cerr << "solver " << oc.name << " failed: " << oc.error << "\n";
        }
        outcomes.push_back(std::move(oc));
    }
    manifest["solvers"] = solver_block;
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");

    std::sort(outcomes.begin(), outcomes.end(),
              [](const SolverOutcome& a, const SolverOutcome& b) {
                  return a.name < b.name;
              });

    // Per-solver artifacts.
    for (const SolverOutcome& oc : outcomes) {
        if (!oc.ok) continue;
        write_history(dir / ("history_" + oc.name + ".csv"), oc.run, ref.f_star);
        write_diagnostics(dir / ("diag_" + oc.name + ".csv"), oc.run);
        if (!oc.run.metric_diagonals.empty()) {
            Vec flat;
            const std::size_t dim = oc.run.metric_diagonals.front().size();
            flat.reserve(oc.run.metric_diagonals.size() * dim);
            for (const Vec& d : oc.run.metric_diagonals)
                flat.insert(flat.end(), d.begin(), d.end());
            save_matrix(dir / ("metrics_" + oc.name + ".bin"),
                        static_cast<std::uint32_t>(oc.run.metric_diagonals.size()),
                        static_cast<std::uint32_t>(dim), flat);
        }
    }

    // Combined tolerance summary (long format, sorted by solver then tol).
    {
        std::string text = "solver,status,tol,reached,iterations,rme,rre,time_s\n";
        for (const SolverOutcome& oc : outcomes) {
            if (!oc.ok) {
                for (double tol : {1e-3, 1e-5, 1e-7}) {
                    text += oc.name + ",failed," + fmt(tol) + ",0,-1,nan,nan,nan\n";
                }
                continue;
            }
            for (const ToleranceHit& hit : oc.metrics.hits) {
                text += oc.name;
                text += ",ok,";
                text += fmt(hit.tol);
                text += ',';
                text += hit.reached ? "1" : "0";
                text += ',';
                text += std::to_string(hit.iterations);
                text += ',';
                text += fmt(hit.rme);
                text += ',';
                text += fmt(hit.rre);
                text += ',';
                text += hit.reached ? fmt_time(hit.time_s) : "nan";
                text += '\n';
            }
        }
        write_text(dir / "summary.csv", text);
    }

    // Plot-ready gap data: gap vs iteration and vs wall time.
    {
        std::string text = "solver,k,gap_rel,time_s\n";
        for (const SolverOutcome& oc : outcomes) {
            if (!oc.ok) continue;
            for (std::size_t i = 0; i < oc.run.history.size(); ++i) {
                text += oc.name;
                text += ',';
                text += std::to_string(oc.run.history[i].k);
                text += ',';
                text += fmt(oc.metrics.gap_rel[i]);
                text += ',';
                text += fmt_time(oc.run.history[i].time_s);
                text += '\n';
            }
        }
        write_text(dir / "figure_gap.csv", text);
    }

    // Machine-readable summary.
    {
        json j;
        j["f_star"] = ref.f_star;
        for (const SolverOutcome& oc : outcomes) {
            json s;
            s["status"] = oc.ok ? "ok" : "failed";
            if (!oc.ok) {
                s["error"] = oc.error;
            } else {
                s["iterations"] = oc.run.history.size();
                s["final_F"] = oc.run.history.empty() ? kNan
                                                      : oc.run.history.back().objective;
                s["final_rme"] = oc.metrics.final_rme;
                if (std::isfinite(oc.metrics.final_rre))
                    s["final_rre"] = oc.metrics.final_rre;
                json hits = json::array();
                for (const ToleranceHit& h : oc.metrics.hits) {
                    json hj;
                    hj["tol"] = h.tol;
                    hj["reached"] = h.reached;
                    hj["iterations"] = h.iterations;
                    hj["time_s"] = h.time_s;
                    hits.push_back(hj);
                }
                s["hits"] = hits;
            }
            j["solvers"][oc.name] = s;
        }
        if (std::isfinite(inst.data_rre)) j["data_rre"] = inst.data_rre;
        write_text(dir / "summary.json", j.dump(2) + "\n");
    }

    const bool any_ok = std::any_of(outcomes.begin(), outcomes.end(),
                                    [](const SolverOutcome& oc) { return oc.ok; });
    return any_ok ? 0 : 1;
}

// --------------------------------------------------------------------- verify

int cmd_verify(const std::string& out_dir) {
    const fs::path dir(out_dir);
    const fs::path manifest_path = dir / "manifest.json";
    const fs::path history_path = dir / "history_sfbem.csv";
    const fs::path diag_path = dir / "diag_sfbem.csv";
    const fs::path metrics_path = dir / "metrics_sfbem.bin";
    if (!fs::exists(manifest_path) || !fs::exists(history_path) ||
        !fs::exists(diag_path)) {
        std::cerr << "verify: no completed sfbem run in " << out_dir << "\n";
        return 2;
    }

    json manifest;
    {
        std::ifstream f(manifest_path);
        if (!f) {
            std::cerr << "verify: cannot read " << manifest_path.string() << "\n";
            return 2;
        }
        f >> manifest;
    }
    if (!manifest.contains("solvers") || !manifest["solvers"].contains("sfbem")) {
        std::cerr << "verify: manifest has no sfbem configuration\n";
        return 2;
    }
    const json& cfg = manifest["solvers"]["sfbem"];
    const double a = cfg["a"].get<double>();
    const double f_star = manifest["reference"]["f_star"].get<double>();

    json report;
    bool overall = true;

    // (a) Metric sequence conditions from the recorded diagonals.
    if (cfg.contains("bound_b") && fs::exists(metrics_path)) {
        const BoundSchedule schedule(cfg["bound_b"].get<double>(),
                                     cfg["bound_p"].get<double>());
        const MatrixFile mf = load_matrix(metrics_path);
        std::vector<DiagonalMetric> metrics;
        metrics.reserve(mf.rows);
        for (std::uint32_t r = 0; r < mf.rows; ++r) {
            Vec d(mf.data.begin() + static_cast<std::ptrdiff_t>(r) * mf.cols,
                  mf.data.begin() + static_cast<std::ptrdiff_t>(r + 1) * mf.cols);
            metrics.emplace_back(std::move(d), schedule.gamma(static_cast<int>(r)),
                                 schedule.eta());
        }
        const MetricConditionReport mc = verify_sequence_conditions(metrics, schedule);
        report["metric_conditions"] = {
            {"pass", mc.conditions_pass},
            {"pairs_checked", mc.rows.size()},
            {"first_violation_k", mc.first_violation_k},
            {"max_excess", mc.max_excess},
            {"log_tau_limit_bound", mc.log_tau_limit_bound},
            {"tau_stabilization_k", mc.tau_stabilization_k},
            {"tau_tail_verified", mc.tau_tail_verified}};
        overall = overall && mc.conditions_pass && mc.tau_tail_verified;
    } else {
        report["metric_conditions"] = {{"pass", false},
                                       {"reason", "no recorded metrics"}};
        overall = false;
    }

    // (b) Rate-constant estimate: gap * (k-1+a)^2 should behave like a bounded
    // constant, and the gap must not spike above its running minimum.
    {
        const CsvTable hist = read_csv(history_path);
        const int k_col = hist.column("k");
        const int gap_col = hist.column("gap");
        if (k_col < 0 || gap_col < 0) {
            std::cerr << "verify: history CSV missing k/gap columns\n";
            return 2;
        }
        const double denom = std::abs(f_star);
        double c_early = 0.0, c_all = 0.0;
        double run_min = std::numeric_limits<double>::infinity();
        bool spike_ok = true;
        int spike_k = -1;
        for (const auto& row : hist.rows) {
            const double k = row[static_cast<std::size_t>(k_col)];
            const double gap_rel = row[static_cast<std::size_t>(gap_col)] / denom;
            if (k < 10) continue;
            const double c = gap_rel * (k - 1.0 + a) * (k - 1.0 + a);
            if (k <= 100 && c > c_early) c_early = c;
            if (c > c_all) c_all = c;
            if (gap_rel > 1e-10 && gap_rel > 100.0 * run_min && spike_ok) {
                spike_ok = false;
                spike_k = static_cast<int>(k);
            }
            run_min = std::min(run_min, std::max(gap_rel, 0.0));
        }
        const bool windowed_ok = c_all <= 3.0 * c_early;
        report["rate"] = {{"constant_early_window", c_early},
                          {"constant_overall", c_all},
                          {"windowed_ok", windowed_ok},
                          {"spike_ok", spike_ok},
                          {"spike_k", spike_k},
                          {"pass", windowed_ok && spike_ok}};
        overall = overall && windowed_ok && spike_ok;
    }

    // (c) Backtracking invariants: nonincreasing steps, nonnegative acceptance
    // slack.
    {
        const CsvTable hist = read_csv(history_path);
        const CsvTable diag = read_csv(diag_path);
        const int alpha_col = hist.column("alpha");
        const int slack_col = diag.column("accept_slack");
        if (alpha_col < 0 || slack_col < 0) {
            std::cerr << "verify: missing alpha/accept_slack columns\n";
            return 2;
        }
        bool alpha_ok = true;
        double prev = std::numeric_limits<double>::infinity();
        for (const auto& row : hist.rows) {
            const double alpha = row[static_cast<std::size_t>(alpha_col)];
            if (alpha > prev * (1.0 + 1e-12)) alpha_ok = false;
            prev = alpha;
        }
        bool slack_ok = true;
        for (const auto& row : diag.rows)
            if (row[static_cast<std::size_t>(slack_col)] < 0.0) slack_ok = false;
        report["backtracking"] = {{"alpha_nonincreasing", alpha_ok},
                                  {"slack_nonnegative", slack_ok},
                                  {"pass", alpha_ok && slack_ok}};
        overall = overall && alpha_ok && slack_ok;
    }

    report["overall_pass"] = overall;
    write_text(dir / "verify_report.json", report.dump(2) + "\n");
    std::cout << report.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------- cli_main

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"composite convex optimization benchmark (forward-backward solvers)"};
    app.require_subcommand(1);

    CliOptions opt;
    std::string verify_dir;

    const std::vector<std::string> experiments = {"deblur", "cs", "density"};
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--experiment", opt.experiment, "problem family")
            ->required()
            ->check(CLI::IsMember(experiments));
        cmd->add_option("--seed", opt.seed, "RNG seed (all randomness flows from it)")
            ->required();
        cmd->add_option("--m", opt.m, "image side (deblur) / measurements (cs)");
        cmd->add_option("--n", opt.n, "signal length (cs) / sample count (density)");
        cmd->add_option("--s", opt.s, "sparsity (cs)");
        cmd->add_option("--blobs", opt.blobs, "phantom component count (deblur)");
        cmd->add_option("--rho", opt.rho, "regularization weight override");
        cmd->add_option("--out", opt.out, "output directory");
    };

    CLI::App* gen = app.add_subcommand("generate", "write a problem instance to disk");
    add_common(gen);

    CLI::App* cmp = app.add_subcommand("compare", "run solvers and write benchmark data");
    add_common(cmp);
    cmp->add_option("--solvers", opt.solvers,
                    "comma-separated solvers (sfbem,fista,gp,sgp,bb_fb)")
        ->delimiter(',');
    cmp->add_option("--max-iter", opt.max_iter, "iteration budget per solver");
    cmp->add_option("--tol", opt.tol, "iterate relative-change stopping tolerance");
    cmp->add_option("--a", opt.a, "inertia parameter (>= 2)");
    cmp->add_option("--alpha0", opt.alpha0, "initial step size");
    cmp->add_option("--delta", opt.delta, "backtracking shrink factor in (0,1)");
    cmp->add_option("--b", opt.bound_b, "metric bound numerator");
    cmp->add_option("--p", opt.bound_p, "metric bound exponent (> 2)");
    cmp->add_option("--ref-budget", opt.ref_budget,
                    "reference solver iterations (default 10 * max-iter)");

    CLI::App* ver = app.add_subcommand("verify", "check invariants of a compare run");
    ver->add_option("--out", verify_dir, "compare output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(opt);
        if (cmp->parsed()) return cmd_compare(opt);
        if (ver->parsed()) return cmd_verify(verify_dir);
    } catch (const numerical_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace vmfb
