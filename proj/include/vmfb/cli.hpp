#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vmfb {

/// Parsed command-line options shared by the generate/compare subcommands.
/// Zero / negative sentinels mean "use the experiment family default".
struct CliOptions {
    std::string experiment;
    std::vector<std::string> solvers = {"sfbem", "fista"};
    std::uint64_t seed = 0;
    std::size_t m = 0;   // image side (deblur) or measurement count (cs)
    std::size_t n = 0;   // signal length (cs) or sample count (density)
    std::size_t s = 0;   // sparsity (cs)
    int blobs = 4;       // phantom components (deblur)
    int max_iter = 1000;
    int ref_budget = 0;  // 0 -> 10 * max_iter
    double tol = 0.0;    // > 0 -> iterate relative-change stopping rule
    double a = 0.0;      // inertia parameter override
    double alpha0 = 0.0; // initial step override
    double delta = 0.0;  // backtracking factor override
    double rho = -1.0;   // regularization weight override
    double bound_b = 0.0; // metric bound numerator override
    double bound_p = 0.0; // metric bound exponent override
    std::string out;      // output directory ("" -> vmfb_<experiment>_seed<seed>)
};

/// Writes instance files plus manifest.json into the output directory.
/// Returns a process exit code (0 ok, 2 usage/I/O error).
int cmd_generate(const CliOptions& opt);

/// Generates the instance, computes the reference solution, runs every
/// requested solver, and writes per-solver histories, the tolerance summary,
/// and plot-ready gap data. Returns 0 if at least one solver succeeded,
/// 1 if all failed, 2 on usage/I/O errors.
int cmd_compare(const CliOptions& opt);

/// Reads a compare output directory and emits verify_report.json with
/// (a) metric-condition checks, (b) a rate-constant estimate and check,
/// (c) backtracking invariants. Returns 0 when the report was written,
/// 2 when required artifacts are missing.
int cmd_verify(const std::string& out_dir);

/// Full argv entry point (parses subcommands, maps exceptions to exit codes).
int cli_main(int argc, const char* const* argv);

} // namespace vmfb
