#include "vmfb/metric.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace vmfb {

// ---------------------------------------------------------------- BoundSchedule

BoundSchedule::BoundSchedule(double b, double p) : b_(b), p_(p) {
    if (!(b > 0.0) || !std::isfinite(b))
        throw std::invalid_argument("BoundSchedule: b must be finite and > 0");
    if (!(p > 2.0) || !std::isfinite(p))
        throw std::invalid_argument("BoundSchedule: p must be finite and > 2 "
                                    "(summability of the eccentricities)");
}

double BoundSchedule::zeta(int k) const {
    if (k < 0) throw std::invalid_argument("BoundSchedule::zeta: k < 0");
    return b_ / std::pow(static_cast<double>(k) + 1.0, p_);
}

double BoundSchedule::gamma(int k) const { return std::sqrt(1.0 + zeta(k)); }

double BoundSchedule::eta() const { return 1.0 / gamma(0); }

// --------------------------------------------------------------- DiagonalMetric

DiagonalMetric::DiagonalMetric(std::size_t n)
    : dim_(n), gamma_(1.0), eta_(1.0), identity_(true) {}

DiagonalMetric DiagonalMetric::identity(std::size_t n) { return DiagonalMetric(n); }

DiagonalMetric::DiagonalMetric(Vec d, double gamma, double eta)
    : d_(std::move(d)), dim_(d_.size()), gamma_(gamma), eta_(eta), identity_(false) {
    if (d_.empty()) throw std::invalid_argument("DiagonalMetric: empty diagonal");
    if (!(gamma_ >= 1.0) || !std::isfinite(gamma_))
        throw std::invalid_argument("DiagonalMetric: gamma must be >= 1");
    if (!(eta_ > 0.0))
        throw std::invalid_argument("DiagonalMetric: eta must be > 0");
    const double slack = 1.0 + 1e-12;
    const double lo = (1.0 / gamma_) / slack;
    const double hi = gamma_ * slack;
    const double floor = eta_ / slack;
    for (double v : d_) {
        if (!std::isfinite(v) || v < lo || v > hi)
            throw std::invalid_argument("DiagonalMetric: entry outside [1/gamma, gamma]");
        if (v < floor)
            throw std::invalid_argument("DiagonalMetric: entry below eta");
    }
}

Vec DiagonalMetric::diagonal() const {
    if (identity_) return Vec(dim_, 1.0);
    return d_;
}

double DiagonalMetric::weighted_norm_sq(const Vec& v) const {
    if (v.size() != dim_)
        throw std::invalid_argument("DiagonalMetric::weighted_norm_sq: dimension mismatch");
    double s = 0.0;
    if (identity_) {
        for (double x : v) s += x * x;
    } else {
        for (std::size_t i = 0; i < v.size(); ++i) s += d_[i] * v[i] * v[i];
    }
    return s;
}

// ----------------------------------------------------------------- build_metric

DiagonalMetric build_metric(const Vec& v, const Vec& w, const BoundSchedule& schedule,
                            int k) {
    check_same_dim(v, w, "build_metric");
    if (k < 0) throw std::invalid_argument("build_metric: k < 0");
    const double g = schedule.gamma(k);
    const double lo = 1.0 / g;
    Vec d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0.0 || w[i] < 0.0 || !std::isfinite(v[i]) || !std::isfinite(w[i]))
            throw std::invalid_argument("build_metric: inputs must be finite and >= 0");
        double ratio;
        if (w[i] == 0.0 && v[i] == 0.0) {
            ratio = 1.0; // no information: neutral scaling
        } else if (v[i] == 0.0) {
            ratio = g; // w_i / 0 -> +inf, clamped from above
        } else {
            ratio = w[i] / v[i];
            if (ratio < lo) ratio = lo;
            if (ratio > g) ratio = g;
        }
        d[i] = 1.0 / ratio;
    }
    return DiagonalMetric(std::move(d), g, schedule.eta());
}

// --------------------------------------------------- verify_sequence_conditions

MetricConditionReport verify_sequence_conditions(const std::vector<DiagonalMetric>& metrics,
                                                 const BoundSchedule& schedule) {
    MetricConditionReport rep;

    // Realized two-sided bounds between consecutive metrics.
    const double slack = 1.0 + 1e-12;
    double log_tau_run =
        metrics.empty() ? 0.0 : 2.0 * std::log(schedule.gamma(0));
    for (std::size_t k = 0; k + 1 < metrics.size(); ++k) {
        const DiagonalMetric& cur = metrics[k];
        const DiagonalMetric& nxt = metrics[k + 1];
        if (cur.dim() != nxt.dim())
            throw std::invalid_argument("verify_sequence_conditions: dimension mismatch");
        double max_ratio = 1.0;
        for (std::size_t i = 0; i < cur.dim(); ++i) {
            const double a = cur.entry(i);
            const double b = nxt.entry(i);
            const double r = a > b ? a / b : b / a;
            if (r > max_ratio) max_ratio = r;
        }
        MetricConditionRow row;
        row.k = static_cast<int>(k);
        row.max_ratio = max_ratio - 1.0;
        row.eta_k = schedule.gamma(static_cast<int>(k) + 1) * schedule.gamma(static_cast<int>(k)) - 1.0;
        log_tau_run += 2.0 * std::log(schedule.gamma(static_cast<int>(k) + 1));
        row.log_tau = log_tau_run;
        const double excess = max_ratio - (1.0 + row.eta_k) * slack;
        if (excess > rep.max_excess) rep.max_excess = excess;
        if (excess > 0.0 && rep.conditions_pass) {
            rep.conditions_pass = false;
            rep.first_violation_k = row.k;
        }
        rep.rows.push_back(row);
    }

    // Closed-form tail facts about the schedule itself. tau_k = prod gamma_j^2
    // satisfies log(tau_inf) <= sum_j zeta(j), and the relative increment of
    // tau at step k+1 equals zeta(k+1) = b/(k+2)^p.
    double log_tau = 0.0;
    // sum_{j>=0} log(1 + b/(j+1)^p): direct sum until terms vanish, then an
    // integral bound for the remainder.
    long long j = 0;
    for (; j < 4'000'000; ++j) {
        const double z = schedule.b() / std::pow(static_cast<double>(j) + 1.0, schedule.p());
        if (z < 1e-16) break;
        log_tau += std::log1p(z);
    }
    const double jj = static_cast<double>(j) + 1.0;
    log_tau += schedule.b() * std::pow(jj, 1.0 - schedule.p()) / (schedule.p() - 1.0);
    rep.log_tau_limit_bound = log_tau;

    const double threshold = 1e-9;
    // Smallest k with b/(k+2)^p < threshold for all later indices (the
    // increment is monotone decreasing, so the first index suffices).
    double k0 = std::ceil(std::pow(schedule.b() / threshold, 1.0 / schedule.p()) - 2.0);
    if (k0 < 0.0) k0 = 0.0;
    long long cand = static_cast<long long>(k0);
    // Guard the floating-point rounding of the closed form.
    auto incr = [&](long long k) {
        return schedule.b() / std::pow(static_cast<double>(k) + 2.0, schedule.p());
    };
    while (cand > 0 && incr(cand - 1) < threshold) --cand;
    while (incr(cand) >= threshold) ++cand;
    rep.tau_stabilization_k = cand;
    rep.tau_tail_verified = incr(cand) < threshold && (cand == 0 || incr(cand - 1) >= threshold);
    return rep;
}

std::string MetricConditionReport::to_json_lines() const {
    std::string out;
    char buf[160];
    for (const MetricConditionRow& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "{\"k\":%d,\"max_ratio\":%.17g,\"eta_k\":%.17g,\"log_tau\":%.17g}\n",
                      r.k, r.max_ratio, r.eta_k, r.log_tau);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "{\"conditions_pass\":%s,\"log_tau_limit_bound\":%.17g,"
                  "\"tau_stabilization_k\":%lld}\n",
                  conditions_pass ? "true" : "false", log_tau_limit_bound,
                  tau_stabilization_k);
    out += buf;
    return out;
}

} // namespace vmfb
