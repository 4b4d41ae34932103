#pragma once

#include <memory>
#include <optional>

#include "vmfb/linops.hpp"
#include "vmfb/vec.hpp"

namespace vmfb {

/// Convex differentiable term with a gradient split -grad f(x) = u(x) - v(x),
/// u, v >= 0 componentwise, used to build diagonal scalings.
class SmoothObjective {
public:
    virtual ~SmoothObjective() = default;

    virtual std::size_t dim() const = 0;
    virtual double value(const Vec& x) const = 0;
    virtual void gradient(const Vec& x, Vec& g) const = 0;

    /// Nonnegative split of the negative gradient: -grad f(x) = u - v.
    virtual void split_gradient(const Vec& x, Vec& u, Vec& v) const = 0;

    /// Optional Lipschitz constant of the gradient (diagnostics only).
    virtual std::optional<double> lipschitz_bound() const { return std::nullopt; }

    Vec gradient(const Vec& x) const {
        Vec g;
        gradient(x, g);
        return g;
    }
};

/// Generalized Kullback-Leibler divergence of counts against a linear model:
///   f(x) = sum_i [ b_i log(b_i / t_i) + t_i - b_i ],  t = A x + bg,
/// with the 0 log 0 = 0 convention for b_i = 0. Gradient A^T (1 - b/t);
/// split u = A^T(b/t), v = A^T 1 (constant, precomputed).
class KullbackLeibler final : public SmoothObjective {
public:
    /// Requires bg > 0 and b >= 0 componentwise.
    KullbackLeibler(std::shared_ptr<const LinearOperator> op, Vec counts,
                    double background);

    std::size_t dim() const override { return op_->input_dim(); }
    double value(const Vec& x) const override;
    using SmoothObjective::gradient;
    void gradient(const Vec& x, Vec& g) const override;
    void split_gradient(const Vec& x, Vec& u, Vec& v) const override;

    const Vec& counts() const { return b_; }
    double background() const { return bg_; }

private:
    /// t = A x + bg; throws std::domain_error if t_i <= 0 where b_i > 0.
    Vec model(const Vec& x) const;

    std::shared_ptr<const LinearOperator> op_;
    Vec b_;
    double bg_;
    Vec adj_ones_; // A^T 1
};

/// Smoothed total-variation ("hypersurface") potential on m x m images:
///   f(x) = sum_ij sqrt( (x_{i+1,j}-x_{ij})^2 + (x_{i,j+1}-x_{ij})^2 + delta^2 )
/// with periodic boundary. Gradient D^T (Dx / w), w the per-pixel magnitude.
class HypersurfacePotential final : public SmoothObjective {
public:
    /// smoothing >= 0; strictly positive smoothing keeps the gradient defined
    /// everywhere.
    HypersurfacePotential(std::size_t side, double smoothing);

    std::size_t dim() const override { return grad_op_.input_dim(); }
    double value(const Vec& x) const override;
    using SmoothObjective::gradient;
    void gradient(const Vec& x, Vec& g) const override;
    void split_gradient(const Vec& x, Vec& u, Vec& v) const override;

    std::size_t side() const { return grad_op_.side(); }
    double smoothing() const { return delta_; }

private:
    /// Per-pixel magnitudes w_ij = sqrt(dv^2 + dh^2 + delta^2).
    Vec magnitudes(const Vec& x) const;

    DiscreteGradient grad_op_;
    double delta_;
};

/// Convex quadratic f(x) = (1/2) x^T C x - p^T x with C symmetric (validated
/// to 1e-12 componentwise). Split via the positive/negative parts of C and p;
/// the split is nonnegative on the nonnegative orthant, where the scaled
/// solvers keep their iterates.
class QuadraticForm final : public SmoothObjective {
public:
    QuadraticForm(std::shared_ptr<const DenseOperator> c, Vec linear);

    std::size_t dim() const override { return c_->cols(); }
    double value(const Vec& x) const override;
    using SmoothObjective::gradient;
    void gradient(const Vec& x, Vec& g) const override;
    void split_gradient(const Vec& x, Vec& u, Vec& v) const override;
    std::optional<double> lipschitz_bound() const override;

    const DenseOperator& matrix() const { return *c_; }
    const Vec& linear() const { return p_; }

private:
    std::shared_ptr<const DenseOperator> c_;
    Vec p_;
};

/// Weighted sum f(x) = left(x) + weight * right(x), weight >= 0. Values,
/// gradients, and splits add (the split stays nonnegative because the weight
/// is nonnegative).
class SumObjective final : public SmoothObjective {
public:
    SumObjective(std::shared_ptr<const SmoothObjective> left, double weight,
                 std::shared_ptr<const SmoothObjective> right);

    std::size_t dim() const override { return left_->dim(); }
    double value(const Vec& x) const override;
    using SmoothObjective::gradient;
    void gradient(const Vec& x, Vec& g) const override;
    void split_gradient(const Vec& x, Vec& u, Vec& v) const override;
    std::optional<double> lipschitz_bound() const override;

    double weight() const { return weight_; }

private:
    std::shared_ptr<const SmoothObjective> left_, right_;
    double weight_;
};

} // namespace vmfb
