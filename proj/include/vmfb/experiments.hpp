#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>

#include "vmfb/problem.hpp"
#include "vmfb/rng.hpp"
#include "vmfb/solvers.hpp"

namespace vmfb {

enum class Experiment { deblur, cs, density };

std::string experiment_name(Experiment e);
Experiment experiment_from_name(const std::string& name);

// ----------------------------------------------------------------- deblurring

struct DeblurParams {
    std::size_t side = 128;     // image is side x side, side in {32, 64, 128}
    int blobs = 4;              // phantom component count
    double tv_weight = 0.045;   // regularization weight rho
    double tv_smoothing = 0.05; // hypersurface smoothing delta
    double background = 1.0;
    double psf_sigma = 1.3;     // PSF standard deviation in pixels
};

/// Synthetic Poisson deblurring: smooth nonnegative phantom in [0, 1000],
/// Gaussian PSF, periodic blur, Poisson counts with constant background.
struct DeblurInstance {
    DeblurParams params;
    std::uint64_t seed = 0;
    Vec x_true;
    Vec psf;    // centered, nonnegative, unit sum
    Vec counts; // observed data b

    /// min KL(A x + bg | b) + rho * HS(x) + indicator(x >= 0)
    CompositeProblem problem() const;
    Vec initial_point() const { return counts; }
    std::string cache_key() const;
};

DeblurInstance make_deblur(std::uint64_t seed, const DeblurParams& params = {});

// ----------------------------------------------------- compressed sensing

struct CsParams {
    std::size_t rows = 1000;  // measurements m
    std::size_t cols = 5000;  // signal length n
    std::size_t nnz = 20;     // nonzeros in the true signal
    double l1_weight = 1e-3;  // rho
    double background = 1e-10;
    double column_sum = 0.99; // common column sum of the sensing matrix (< 1)
};

/// Sparse nonnegative recovery from Poisson counts through a flux-consistent
/// sensing matrix (nonnegative, column sums < 1).
struct CsInstance {
    CsParams params;
    std::uint64_t seed = 0;
    std::shared_ptr<const DenseOperator> sensing;
    Vec x_true;
    Vec counts;

    /// min KL(A x + bg | b) + rho * ||x||_1 + indicator(x >= 0)
    CompositeProblem problem() const;
    Vec initial_point() const; // A^T b
    std::string cache_key() const;
};

CsInstance make_cs(std::uint64_t seed, const CsParams& params = {});

// ------------------------------------------------------- density estimation

struct DensityParams {
    std::size_t n = 1000;        // sample size
    double kernel_width = 1.0;   // sigma of the estimator kernel
    bool width_is_variance = true; // interpret widths as variances (default)
};

/// Gaussian-mixture kernel density estimation: quadratic objective over the
/// probability simplex built from a 5-component mixture sample. Component i
/// (1-based) has width (7/9)^{(i-1)/4} and center 14((7/9)^{i-1} - 1).
struct DensityInstance {
    DensityParams params;
    std::uint64_t seed = 0;
    Vec samples;
    std::shared_ptr<const DenseOperator> gram; // C_ij = kernel width 2*sigma
    Vec linear;                                // p_i = (1/n) sum_j kernel sigma

    /// min (1/2) x^T C x - p^T x + indicator(simplex), Y = R^n
    CompositeProblem problem() const;
    Vec initial_point() const; // uniform simplex vertex barycenter
    std::string cache_key() const;
};

DensityInstance make_density(std::uint64_t seed, const DensityParams& params = {});

/// Normalized Gaussian kernel value at distance d, parameterized by variance
/// (width_is_variance) or standard deviation.
double gaussian_kernel(double d, double width, bool width_is_variance);

// ------------------------------------------------------------------ reference

struct ReferenceSolution {
    Vec x_star;
    double f_star = 0.0;
    bool from_cache = false;
};

/// Designated reference solver configuration for each experiment family
/// (deblurring: scaled gradient projection; compressed sensing: BB
/// forward-backward; density: inertial forward-backward), with the family's
/// metric constants and the given iteration budget.
SolverConfig reference_config(Experiment family, int budget);

/// Production comparison configuration for a solver on a family
/// (inertia a, metric policy and bound constants, alpha0 = 1, delta = 0.5).
SolverConfig default_config(Experiment family, Algorithm algorithm);

/// Runs config from x0 (or loads the cached result). The cache entry is keyed
/// by (instance key, budget) in cache_dir; pass an empty path to disable
/// caching. f_star = F(x_final). Throws numerical_failure if F* is not finite.
ReferenceSolution compute_reference(const CompositeProblem& problem,
                                    const SolverConfig& config, const Vec& x0,
                                    const std::filesystem::path& cache_dir,
                                    const std::string& instance_key);

// ----------------------------------------------------------------- evaluation

struct ToleranceHit {
    double tol = 0.0;
    bool reached = false;
    int iterations = -1; // first k with gap_rel < tol
    double time_s = 0.0;
    double rme = 0.0; // at the hit, when iterates were recorded (else NaN)
    double rre = 0.0;
};

struct MetricsReport {
    std::vector<double> gap_rel; // per history record: (F - F*)/|F*|
    std::vector<double> rme;     // per recorded iterate: ||x - x*||/||x*||
    std::vector<double> rre;     // per recorded iterate: ||x - x_true||/||x_true||
    std::vector<ToleranceHit> hits;
    double final_rme = 0.0;
    double final_rre = 0.0; // NaN when x_true is unknown
};

/// Relative error metrics. f_star must be nonzero (the KL objectives are
/// positive; the density objective may be negative, hence |F*| in the
/// denominator). Pass an empty x_true when no ground truth exists.
MetricsReport evaluate(const SolverRun& run, double f_star, const Vec& x_star,
                       const Vec& x_true,
                       const std::vector<double>& tolerances = {1e-3, 1e-5, 1e-7});

} // namespace vmfb
