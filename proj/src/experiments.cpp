#include "vmfb/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "vmfb/errors.hpp"
#include "vmfb/matrix_io.hpp"

namespace vmfb {

namespace {

// FNV-1a, used only to key reference-cache entries.
struct Hasher {
    std::uint64_t h = 1469598103934665603ull;
    void bytes(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    }
    void u64(std::uint64_t v) { bytes(&v, sizeof v); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void str(const std::string& s) { bytes(s.data(), s.size()); }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
};

} // namespace

std::string experiment_name(Experiment e) {
    switch (e) {
    case Experiment::deblur: return "deblur";
    case Experiment::cs: return "cs";
    case Experiment::density: return "density";
    }
    throw std::invalid_argument("experiment_name: unknown experiment");
}

Experiment experiment_from_name(const std::string& name) {
    if (name == "deblur") return Experiment::deblur;
    if (name == "cs") return Experiment::cs;
    if (name == "density") return Experiment::density;
    throw std::invalid_argument("unknown experiment '" + name + "'");
}

// -------------------------------------------------------------------- deblur

CompositeProblem DeblurInstance::problem() const {
    auto blur = std::make_shared<CirculantConvolution>(
        CirculantConvolution::from_centered_psf(params.side, psf));
    auto kl = std::make_shared<KullbackLeibler>(blur, counts, params.background);
    auto hs = std::make_shared<HypersurfacePotential>(params.side, params.tv_smoothing);
    CompositeProblem prob;
    prob.smooth = std::make_shared<SumObjective>(kl, params.tv_weight, hs);
    prob.nonsmooth = NonsmoothTerm::nonneg();
    prob.domain = FeasibleSet::nonneg_orthant();
    return prob;
}

std::string DeblurInstance::cache_key() const {
    Hasher h;
    h.str("deblur");
    h.u64(seed);
    h.u64(params.side);
    h.u64(static_cast<std::uint64_t>(params.blobs));
    h.f64(params.tv_weight);
    h.f64(params.tv_smoothing);
    h.f64(params.background);
    h.f64(params.psf_sigma);
    return "deblur_" + h.hex();
}

DeblurInstance make_deblur(std::uint64_t seed, const DeblurParams& params) {
    if (params.side != 32 && params.side != 64 && params.side != 128)
        throw std::invalid_argument("make_deblur: side must be one of 32, 64, 128");
    if (params.blobs < 1)
        throw std::invalid_argument("make_deblur: need at least one blob");

    DeblurInstance inst;
    inst.params = params;
    inst.seed = seed;
    const std::size_t m = params.side;
    const double md = static_cast<double>(m);
    Rng rng(seed);

    // Smooth phantom: a handful of Gaussian bumps, rescaled to peak at 1000.
    inst.x_true.assign(m * m, 0.0);
    for (int blob = 0; blob < params.blobs; ++blob) {
        const double cx = rng.uniform(0.2, 0.8) * md;
        const double cy = rng.uniform(0.2, 0.8) * md;
        const double radius = rng.uniform(md / 16.0, md / 6.0);
        const double amp = rng.uniform(0.3, 1.0);
        const double inv = 1.0 / (2.0 * radius * radius);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                const double di = static_cast<double>(i) - cx;
                const double dj = static_cast<double>(j) - cy;
                inst.x_true[i * m + j] += amp * std::exp(-(di * di + dj * dj) * inv);
            }
    }
    const double peak = norm_inf(inst.x_true);
    for (double& v : inst.x_true) v *= 1000.0 / peak;

    // Centered Gaussian PSF, truncated by the grid, normalized to unit sum.
    const double c = static_cast<double>(m / 2);
    const double inv_psf = 1.0 / (2.0 * params.psf_sigma * params.psf_sigma);
    inst.psf.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double di = static_cast<double>(i) - c;
            const double dj = static_cast<double>(j) - c;
            inst.psf[i * m + j] = std::exp(-(di * di + dj * dj) * inv_psf);
        }
    const double mass = sum(inst.psf);
    for (double& v : inst.psf) v /= mass;

    const CirculantConvolution blur = CirculantConvolution::from_centered_psf(m, inst.psf);
    Vec blurred = blur.apply(inst.x_true);
    inst.counts.resize(m * m);
    for (std::size_t i = 0; i < inst.counts.size(); ++i) {
        const double lambda = std::max(0.0, blurred[i]) + params.background;
        inst.counts[i] = static_cast<double>(rng.poisson(lambda));
    }
    return inst;
}

// ------------------------------------------------------------------------ cs

CompositeProblem CsInstance::problem() const {
    auto kl = std::make_shared<KullbackLeibler>(sensing, counts, params.background);
    CompositeProblem prob;
    prob.smooth = kl;
    prob.nonsmooth = NonsmoothTerm::nonneg_l1(params.l1_weight);
    prob.domain = FeasibleSet::nonneg_orthant();
    return prob;
}

Vec CsInstance::initial_point() const { return sensing->adjoint(counts); }

std::string CsInstance::cache_key() const {
    Hasher h;
    h.str("cs");
    h.u64(seed);
    h.u64(params.rows);
    h.u64(params.cols);
    h.u64(params.nnz);
    h.f64(params.l1_weight);
    h.f64(params.background);
    h.f64(params.column_sum);
    return "cs_" + h.hex();
}

CsInstance make_cs(std::uint64_t seed, const CsParams& params) {
    if (params.rows == 0 || params.cols == 0 || params.rows >= params.cols)
        throw std::invalid_argument("make_cs: need 0 < rows < cols");
    if (params.nnz == 0 || params.nnz > params.cols)
        throw std::invalid_argument("make_cs: nnz must lie in [1, cols]");
    if (!(params.column_sum > 0.0) || !(params.column_sum <= 1.0))
        throw std::invalid_argument("make_cs: column_sum must lie in (0, 1]");

    CsInstance inst;
    inst.params = params;
    inst.seed = seed;
    const std::size_t m = params.rows, n = params.cols;
    Rng rng(seed);

    // Uniform nonnegative entries, then each column rescaled to a common sum
    // strictly below 1: nonnegativity and the flux condition hold by
    // construction.
    Vec entries(m * n);
    for (double& v : entries) v = rng.uniform();
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += entries[i * n + j];
        const double scale = params.column_sum / s;
        for (std::size_t i = 0; i < m; ++i) entries[i * n + j] *= scale;
    }
    inst.sensing = std::make_shared<DenseOperator>(m, n, std::move(entries),
                                                   /*require_nonneg=*/true);

    // Support: partial Fisher-Yates for nnz distinct indices.
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    inst.x_true.assign(n, 0.0);
    for (std::size_t i = 0; i < params.nnz; ++i) {
        const std::size_t pick = i + rng.uniform_index(n - i);
        std::swap(idx[i], idx[pick]);
        inst.x_true[idx[i]] = rng.uniform(0.0, 1e5);
    }

    const Vec flux = inst.sensing->apply(inst.x_true);
    inst.counts.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        inst.counts[i] =
            static_cast<double>(rng.poisson(flux[i] + params.background));
    return inst;
}

// ------------------------------------------------------------------- density

double gaussian_kernel(double d, double width, bool width_is_variance) {
    if (!(width > 0.0))
        throw std::invalid_argument("gaussian_kernel: width must be > 0");
    const double var = width_is_variance ? width : width * width;
    return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

CompositeProblem DensityInstance::problem() const {
    CompositeProblem prob;
    prob.smooth = std::make_shared<QuadraticForm>(gram, linear);
    prob.nonsmooth = NonsmoothTerm::simplex();
    prob.domain = FeasibleSet::all_space();
    prob.lipschitz = prob.smooth->lipschitz_bound();
    return prob;
}

Vec DensityInstance::initial_point() const {
    return Vec(params.n, 1.0 / static_cast<double>(params.n));
}

std::string DensityInstance::cache_key() const {
    Hasher h;
    h.str("density");
    h.u64(seed);
    h.u64(params.n);
    h.f64(params.kernel_width);
    h.u64(params.width_is_variance ? 1 : 0);
    return "density_" + h.hex();
}

DensityInstance make_density(std::uint64_t seed, const DensityParams& params) {
    if (params.n < 10)
        throw std::invalid_argument("make_density: n must be >= 10");

    DensityInstance inst;
    inst.params = params;
    inst.seed = seed;
    const std::size_t n = params.n;
    Rng rng(seed);

    // Equal-weight 5-component mixture; component i (1-based) has width
    // (7/9)^{(i-1)/4} and center 14((7/9)^{i-1} - 1).
    double widths[5], centers[5];
    for (int i = 0; i < 5; ++i) {
        const double r = std::pow(7.0 / 9.0, static_cast<double>(i));
        widths[i] = std::pow(r, 0.25);
        centers[i] = 14.0 * (r - 1.0);
    }
    inst.samples.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        const auto comp = static_cast<std::size_t>(rng.uniform_index(5));
        const double spread = params.width_is_variance ? std::sqrt(widths[comp])
                                                       : widths[comp];
        inst.samples[s] = centers[comp] + spread * rng.normal();
    }

    Vec gram_entries(n * n);
    inst.linear.assign(n, 0.0);
    const double two_sigma = 2.0 * params.kernel_width;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const double d = inst.samples[i] - inst.samples[j];
            const double cij = gaussian_kernel(d, two_sigma, params.width_is_variance);
            gram_entries[i * n + j] = cij;
            gram_entries[j * n + i] = cij;
        }
        double pi = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            pi += gaussian_kernel(inst.samples[i] - inst.samples[j],
                                  params.kernel_width, params.width_is_variance);
        inst.linear[i] = pi / static_cast<double>(n);
    }
    inst.gram = std::make_shared<DenseOperator>(n, n, std::move(gram_entries));
    return inst;
}

// ----------------------------------------------------------------- reference

SolverConfig reference_config(Experiment family, int budget) {
    if (budget < 1) throw std::invalid_argument("reference_config: budget < 1");
    Algorithm alg = Algorithm::fista;
    if (family == Experiment::deblur) alg = Algorithm::sgp;
    if (family == Experiment::cs) alg = Algorithm::bb_fb;
    SolverConfig cfg = default_config(family, alg);
    cfg.max_iter = budget;
    cfg.stop = StopRule::budget_only();
    cfg.record_iterates = false;
    cfg.record_metrics = false;
    return cfg;
}

SolverConfig default_config(Experiment family, Algorithm algorithm) {
    SolverConfig cfg;
    cfg.algorithm = algorithm;
    cfg.alpha0 = 1.0;
    cfg.backtrack_delta = 0.5;
    const bool scaled = algorithm == Algorithm::sfbem || algorithm == Algorithm::sgp;
    cfg.metric = scaled ? MetricPolicy::split_gradient : MetricPolicy::identity;
    switch (family) {
    case Experiment::deblur:
        cfg.inertia = InertiaSchedule(2.1);
        if (scaled) cfg.bounds = BoundSchedule(1e13, 2.1);
        break;
    case Experiment::cs:
        cfg.inertia = InertiaSchedule(10.0);
        if (scaled) cfg.bounds = BoundSchedule(1e6, 2.1);
        // The KL curvature along the trajectory is of order 1/flux, so useful
        // steps are of order the signal scale; backtracking only shrinks, so
        // start at the top of the signal range.
        cfg.alpha0 = 1e5;
        break;
    case Experiment::density:
        cfg.inertia = InertiaSchedule(2.1);
        if (scaled) cfg.bounds = BoundSchedule(1e10, 2.1);
        break;
    }
    return cfg;
}

ReferenceSolution compute_reference(const CompositeProblem& problem,
                                    const SolverConfig& config, const Vec& x0,
                                    const std::filesystem::path& cache_dir,
                                    const std::string& instance_key) {
    namespace fs = std::filesystem;
    fs::path vec_path, meta_path;
    const bool use_cache = !cache_dir.empty();
    if (use_cache) {
        const std::string stem =
            instance_key + "_" + algorithm_name(config.algorithm) + "_" +
            std::to_string(config.max_iter);
        fs::create_directories(cache_dir);
        vec_path = cache_dir / (stem + ".ref.bin");
        meta_path = cache_dir / (stem + ".ref.json");
        if (fs::exists(vec_path) && fs::exists(meta_path)) {
            MatrixFile mf = load_matrix(vec_path);
            std::ifstream meta(meta_path);
            nlohmann::json j;
            meta >> j;
            if (!j.contains("f_star") || !j["f_star"].is_number())
                throw std::runtime_error("compute_reference: corrupt cache entry " +
                                         meta_path.string());
            ReferenceSolution ref;
            ref.x_star = std::move(mf.data);
            ref.f_star = j["f_star"].get<double>();
            ref.from_cache = true;
            return ref;
        }
    }

    SolverRun run = run_solver(config, problem, x0);
    ReferenceSolution ref;
    ref.x_star = run.x_final;
    ref.f_star = problem.objective(run.x_final);
    if (!std::isfinite(ref.f_star))
        throw numerical_failure("compute_reference: reference objective is not finite");

    if (use_cache) {
        save_matrix(vec_path, 1, static_cast<std::uint32_t>(ref.x_star.size()),
                    ref.x_star);
        nlohmann::json j;
        j["f_star"] = ref.f_star;
        j["budget"] = config.max_iter;
        j["algorithm"] = algorithm_name(config.algorithm);
        std::ofstream meta(meta_path, std::ios::trunc);
        meta << j.dump() << '\n';
        if (!meta) throw std::runtime_error("compute_reference: cannot write cache");
    }
    return ref;
}

// ---------------------------------------------------------------- evaluation

MetricsReport evaluate(const SolverRun& run, double f_star, const Vec& x_star,
                       const Vec& x_true, const std::vector<double>& tolerances) {
    if (f_star == 0.0 || !std::isfinite(f_star))
        throw std::invalid_argument("evaluate: reference objective must be finite and "
                                    "nonzero (relative gap undefined)");
    const double denom = std::abs(f_star);
    const double nan = std::numeric_limits<double>::quiet_NaN();

    MetricsReport rep;
    rep.gap_rel.reserve(run.history.size());
    for (const IterationRecord& r : run.history)
        rep.gap_rel.push_back((r.objective - f_star) / denom);

    const double x_star_norm = norm2(x_star);
    const double x_true_norm = x_true.empty() ? 0.0 : norm2(x_true);
    const bool have_iterates = run.iterates.size() == run.history.size();
    if (have_iterates) {
        rep.rme.reserve(run.iterates.size());
        if (!x_true.empty()) rep.rre.reserve(run.iterates.size());
        for (const Vec& x : run.iterates) {
            rep.rme.push_back(norm2(sub(x, x_star)) / x_star_norm);
            if (!x_true.empty())
                rep.rre.push_back(norm2(sub(x, x_true)) / x_true_norm);
        }
    }
    rep.final_rme = run.x_final.empty() ? nan
                                        : norm2(sub(run.x_final, x_star)) / x_star_norm;
    rep.final_rre = (!x_true.empty() && !run.x_final.empty())
                        ? norm2(sub(run.x_final, x_true)) / x_true_norm
                        : nan;

    for (double tol : tolerances) {
        ToleranceHit hit;
        hit.tol = tol;
        hit.rme = nan;
        hit.rre = nan;
        for (std::size_t i = 0; i < rep.gap_rel.size(); ++i) {
            if (rep.gap_rel[i] < tol) {
                hit.reached = true;
                hit.iterations = run.history[i].k;
                hit.time_s = run.history[i].time_s;
                if (have_iterates) {
                    hit.rme = rep.rme[i];
                    if (!x_true.empty()) hit.rre = rep.rre[i];
                }
                break;
            }
        }
        rep.hits.push_back(hit);
    }
    return rep;
}

} // namespace vmfb
