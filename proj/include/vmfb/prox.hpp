#pragma once

#include "vmfb/metric.hpp"
#include "vmfb/vec.hpp"

namespace vmfb {

/// Closed convex constraint set used for the extrapolation projection.
class FeasibleSet {
public:
    enum class Kind { all_space, nonneg_orthant };

    static FeasibleSet all_space() { return FeasibleSet(Kind::all_space); }
    static FeasibleSet nonneg_orthant() { return FeasibleSet(Kind::nonneg_orthant); }

    Kind kind() const { return kind_; }
    bool contains(const Vec& x) const;

private:
    explicit FeasibleSet(Kind k) : kind_(k) {}
    Kind kind_;
};

/// Projection onto the feasible set in the metric induced by the diagonal D.
/// For the supported sets (whole space, nonnegative orthant) the projection is
/// separable and independent of any diagonal metric; other set kinds would
/// throw not_implemented.
Vec scaled_projection(const FeasibleSet& set, const Vec& x, const DiagonalMetric& d);

/// Convex nonsmooth term g. Supported kinds:
///   zero             g = 0
///   nonneg           indicator of {x >= 0}
///   nonneg_l1        weight * ||x||_1 + indicator of {x >= 0}
///   simplex          indicator of the probability simplex {x >= 0, sum x = 1}
class NonsmoothTerm {
public:
    enum class Kind { zero, nonneg, nonneg_l1, simplex };

    static NonsmoothTerm zero() { return NonsmoothTerm(Kind::zero, 0.0); }
    static NonsmoothTerm nonneg() { return NonsmoothTerm(Kind::nonneg, 0.0); }
    static NonsmoothTerm nonneg_l1(double weight);
    static NonsmoothTerm simplex() { return NonsmoothTerm(Kind::simplex, 0.0); }

    Kind kind() const { return kind_; }
    double l1_weight() const { return weight_; }

    /// Finite part of g (the indicator contributes 0 on its domain; callers
    /// keep iterates feasible, so the infinite branch is not modeled).
    double value(const Vec& x) const;

    /// Whether x lies in dom g (within tol for the simplex sum).
    bool feasible(const Vec& x, double tol = 1e-9) const;

private:
    NonsmoothTerm(Kind k, double w) : kind_(k), weight_(w) {}
    Kind kind_;
    double weight_;
};

/// Scaled proximal-gradient step: the unique minimizer of
///   grad^T (z - y) + g(z) + (1/(2*alpha)) ||z - y||_D^2
/// over z, i.e. prox^D_{alpha g}(y - alpha D^{-1} grad).
///
/// Requires alpha in [1e-300, inf) and a positive definite diagonal; throws
/// std::invalid_argument otherwise.
Vec scaled_prox(const NonsmoothTerm& g, const Vec& y, const Vec& grad, double alpha,
                const DiagonalMetric& d);

/// Euclidean projection onto the probability simplex.
Vec project_simplex(const Vec& y);

/// Weighted simplex projection: minimizes sum_i (z_i - y_i)^2 / (2 c_i) over
/// the simplex, c_i > 0. Solves the dual equation sum_i max(0, y_i - t c_i) = 1
/// by a safeguarded secant iteration; the result satisfies the constraint sum
/// to 1e-12 and every entry is >= 0.
Vec project_simplex_weighted(const Vec& y, const Vec& c);

} // namespace vmfb
