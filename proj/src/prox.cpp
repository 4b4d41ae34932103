#include "vmfb/prox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vmfb/errors.hpp"

namespace vmfb {

// ------------------------------------------------------------------ FeasibleSet

bool FeasibleSet::contains(const Vec& x) const {
    switch (kind_) {
    case Kind::all_space:
        return true;
    case Kind::nonneg_orthant:
        return all_nonneg(x);
    }
    return false;
}

Vec scaled_projection(const FeasibleSet& set, const Vec& x, const DiagonalMetric& d) {
    if (x.size() != d.dim())
        throw std::invalid_argument("scaled_projection: dimension mismatch");
    switch (set.kind()) {
    case FeasibleSet::Kind::all_space:
        return x;
    case FeasibleSet::Kind::nonneg_orthant:
        // Separable set + diagonal metric: the projection clamps coordinates
        // independently, so the diagonal weights drop out.
        return clamp_nonneg(x);
    }
    throw not_implemented("scaled_projection: unsupported set kind");
}

// ---------------------------------------------------------------- NonsmoothTerm

NonsmoothTerm NonsmoothTerm::nonneg_l1(double weight) {
    if (!(weight >= 0.0) || !std::isfinite(weight))
        throw std::invalid_argument("NonsmoothTerm: l1 weight must be >= 0");
    return NonsmoothTerm(Kind::nonneg_l1, weight);
}

double NonsmoothTerm::value(const Vec& x) const {
    if (kind_ != Kind::nonneg_l1) return 0.0;
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return weight_ * s;
}

bool NonsmoothTerm::feasible(const Vec& x, double tol) const {
    switch (kind_) {
    case Kind::zero:
        return true;
    case Kind::nonneg:
    case Kind::nonneg_l1:
        return all_nonneg(x);
    case Kind::simplex:
        return all_nonneg(x) && std::abs(sum(x) - 1.0) <= tol;
    }
    return false;
}

// ------------------------------------------------------------------ projections

Vec project_simplex_weighted(const Vec& y, const Vec& c) {
    check_same_dim(y, c, "project_simplex_weighted");
    if (y.empty()) throw std::invalid_argument("project_simplex_weighted: empty input");
    double sum_y = 0.0, sum_c = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(c[i] > 0.0) || !std::isfinite(c[i]))
            throw std::invalid_argument("project_simplex_weighted: weights must be > 0");
        sum_y += y[i];
        sum_c += c[i];
    }

    auto phi = [&](double t) {
        double s = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            const double z = y[i] - t * c[i];
            if (z > 0.0) s += z;
        }
        return s - 1.0;
    };

    // Bracket: at t_lo the hinge sum is >= sum(y) - t_lo*sum(c) = 1, at t_hi
    // every hinge is inactive.
    double t_lo = (sum_y - 1.0) / sum_c;
    double t_hi = y[0] / c[0];
    for (std::size_t i = 1; i < y.size(); ++i) t_hi = std::max(t_hi, y[i] / c[i]);
    if (t_hi < t_lo) t_hi = t_lo;
    double f_lo = phi(t_lo);
    double f_hi = phi(t_hi);
    double t = t_lo;
    double f = f_lo;

    // Illinois-safeguarded secant on the monotone piecewise-linear dual: when
    // the same endpoint moves twice in a row, the opposite ordinate is halved,
    // which prevents the one-sided stagnation of plain false position.
    int side = 0;
    for (int it = 0; it < 500; ++it) {
        if (std::abs(f) < 1e-14) break;
        if (t_hi - t_lo < 1e-15 * (1.0 + std::abs(t))) break;
        double t_new = 0.5 * (t_lo + t_hi);
        if (f_hi != f_lo) {
            const double secant = t_lo - f_lo * (t_hi - t_lo) / (f_hi - f_lo);
            if (secant > t_lo && secant < t_hi) t_new = secant;
        }
        const double f_new = phi(t_new);
        t = t_new;
        f = f_new;
        if (f_new > 0.0) {
            t_lo = t_new;
            f_lo = f_new;
            if (side == -1) f_hi *= 0.5;
            side = -1;
        } else {
            t_hi = t_new;
            f_hi = f_new;
            if (side == 1) f_lo *= 0.5;
            side = 1;
        }
    }

    // Polish: with the active set fixed the dual is linear, so one closed-form
    // step lands on the exact root.
    double sy_act = 0.0, sc_act = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] - t * c[i] > 0.0) {
            sy_act += y[i];
            sc_act += c[i];
        }
    }
    if (sc_act > 0.0) t = (sy_act - 1.0) / sc_act;

    Vec z(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double v = y[i] - t * c[i];
        z[i] = v > 0.0 ? v : 0.0;
    }
    return z;
}

Vec project_simplex(const Vec& y) {
    return project_simplex_weighted(y, Vec(y.size(), 1.0));
}

// ------------------------------------------------------------------ scaled_prox

Vec scaled_prox(const NonsmoothTerm& g, const Vec& y, const Vec& grad, double alpha,
                const DiagonalMetric& d) {
    check_same_dim(y, grad, "scaled_prox");
    if (y.size() != d.dim())
        throw std::invalid_argument("scaled_prox: metric dimension mismatch");
    if (!(alpha >= 1e-300) || !std::isfinite(alpha))
        throw std::invalid_argument("scaled_prox: step size must be finite and >= 1e-300");

    const bool ident = d.is_identity();
    Vec u(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        u[i] = ident ? y[i] - alpha * grad[i] : y[i] - alpha * grad[i] / d.entry(i);

    switch (g.kind()) {
    case NonsmoothTerm::Kind::zero:
        return u;
    case NonsmoothTerm::Kind::nonneg:
        return clamp_nonneg(u);
    case NonsmoothTerm::Kind::nonneg_l1: {
        const double rho = g.l1_weight();
        Vec z(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double shift = ident ? alpha * rho : alpha * rho / d.entry(i);
            const double v = u[i] - shift;
            z[i] = v > 0.0 ? v : 0.0;
        }
        return z;
    }
    case NonsmoothTerm::Kind::simplex: {
        if (ident) return project_simplex(u);
        Vec c(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) c[i] = 1.0 / d.entry(i);
        return project_simplex_weighted(u, c);
    }
    }
    throw not_implemented("scaled_prox: unsupported nonsmooth kind");
}

} // namespace vmfb
