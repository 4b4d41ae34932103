#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vmfb/vec.hpp"

namespace vmfb {

/// Decaying bound schedule gamma_k = sqrt(1 + b / (k+1)^p) with b > 0, p > 2,
/// so that the eccentricities zeta_k = gamma_k^2 - 1 are summable and the
/// metric sequence converges to the identity.
class BoundSchedule {
public:
    BoundSchedule(double b, double p);

    double b() const { return b_; }
    double p() const { return p_; }

    double zeta(int k) const;  // b / (k+1)^p
    double gamma(int k) const; // sqrt(1 + zeta(k))
    double gamma_sup() const { return gamma(0); }

    /// Uniform lower bound on all metric eigenvalues: 1 / gamma(0).
    double eta() const;

private:
    double b_, p_;
};

/// Symmetric positive definite diagonal scaling with eigenvalues confined to
/// [1/gamma, gamma]. Identity metrics carry no diagonal storage and skip the
/// scaling arithmetic entirely.
class DiagonalMetric {
public:
    static DiagonalMetric identity(std::size_t n);

    /// Validates gamma >= 1, eta > 0 and d_i in [1/gamma, gamma] (with a
    /// 1e-12 relative slack), d_i >= eta.
    DiagonalMetric(Vec d, double gamma, double eta);

    std::size_t dim() const { return dim_; }
    bool is_identity() const { return identity_; }
    double gamma() const { return gamma_; }
    double eta() const { return eta_; }

    double entry(std::size_t i) const { return identity_ ? 1.0 : d_[i]; }

    /// Materialized diagonal (ones for the identity).
    Vec diagonal() const;

    /// sum_i d_i v_i^2
    double weighted_norm_sq(const Vec& v) const;

private:
    DiagonalMetric(std::size_t n); // identity

    Vec d_;
    std::size_t dim_;
    double gamma_, eta_;
    bool identity_;
};

/// Split-gradient scaling: d_i = 1 / clamp(w_i / v_i, 1/gamma_k, gamma_k),
/// where v is the multiplicative (nonnegative) part of the gradient split and
/// w the current weights. Conventions: v_i = 0 with w_i > 0 clamps at
/// gamma_k; w_i = v_i = 0 gives a unit entry. Negative inputs throw
/// std::invalid_argument.
DiagonalMetric build_metric(const Vec& v, const Vec& w, const BoundSchedule& schedule,
                            int k);

struct MetricConditionRow {
    int k = 0;
    double max_ratio = 0.0; // max_i max(d^{k+1}_i/d^k_i, d^k_i/d^{k+1}_i) - 1
    double eta_k = 0.0;     // admissible bound gamma_{k+1} * gamma_k - 1
    double log_tau = 0.0;   // log prod_{j<=k+1} gamma_j^2 (tau itself overflows)
};

struct MetricConditionReport {
    bool conditions_pass = true;
    int first_violation_k = -1;
    /// Largest (max_ratio - eta_k) over all checked pairs; <= 0 iff pass.
    double max_excess = 0.0;
    std::vector<MetricConditionRow> rows;

    /// log prod gamma_j^2 over the whole schedule (closed-form bound; finite
    /// because the eccentricities are summable, though the product itself can
    /// exceed the double range for large b).
    double log_tau_limit_bound = 0.0;
    /// Smallest k such that the schedule's relative tau-increment
    /// zeta(k+1) = b/(k+2)^p stays below 1e-9 from k on (closed form).
    long long tau_stabilization_k = -1;
    /// Numerical spot check of the closed form at the boundary.
    bool tau_tail_verified = false;

    /// One JSON object per line: {"k":..,"max_ratio":..,"eta_k":..,"log_tau":..}.
    std::string to_json_lines() const;
};

/// Checks the two-sided inter-iteration bounds
///   d^{k+1}_i <= (1 + eta_k) d^k_i  and  d^k_i <= (1 + eta_k) d^{k+1}_i,
/// with eta_k = gamma_{k+1} * gamma_k - 1, for consecutive metrics produced
/// under the given schedule (1e-12 relative slack for round-off).
MetricConditionReport verify_sequence_conditions(const std::vector<DiagonalMetric>& metrics,
                                                 const BoundSchedule& schedule);

} // namespace vmfb
