#include "vmfb/objectives.hpp"

#include <cmath>
#include <stdexcept>

namespace vmfb {

// -------------------------------------------------------------- KullbackLeibler

KullbackLeibler::KullbackLeibler(std::shared_ptr<const LinearOperator> op, Vec counts,
                                 double background)
    : op_(std::move(op)), b_(std::move(counts)), bg_(background) {
    if (!op_) throw std::invalid_argument("KullbackLeibler: null operator");
    if (b_.size() != op_->output_dim())
        throw std::invalid_argument("KullbackLeibler: counts size " +
                                    std::to_string(b_.size()) + " != operator output " +
                                    std::to_string(op_->output_dim()));
    if (!(bg_ > 0.0) || !std::isfinite(bg_))
        throw std::invalid_argument("KullbackLeibler: background must be > 0");
    for (double v : b_)
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument("KullbackLeibler: counts must be finite and >= 0");
    adj_ones_ = op_->adjoint(Vec(op_->output_dim(), 1.0));
}

Vec KullbackLeibler::model(const Vec& x) const {
    Vec t = op_->apply(x);
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] += bg_;
        if (b_[i] > 0.0 && t[i] <= 0.0)
            throw std::domain_error("KullbackLeibler: nonpositive model value where "
                                    "counts are positive");
    }
    return t;
}

double KullbackLeibler::value(const Vec& x) const {
    const Vec t = model(x);
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (b_[i] > 0.0)
            s += b_[i] * std::log(b_[i] / t[i]) + t[i] - b_[i];
        else
            s += t[i]; // 0 log 0 = 0 convention
    }
    return s;
}

void KullbackLeibler::gradient(const Vec& x, Vec& g) const {
    Vec t = model(x);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = 1.0 - (b_[i] > 0.0 ? b_[i] / t[i] : 0.0);
    op_->adjoint(t, g);
}

void KullbackLeibler::split_gradient(const Vec& x, Vec& u, Vec& v) const {
    Vec t = model(x);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = b_[i] > 0.0 ? b_[i] / t[i] : 0.0;
    op_->adjoint(t, u);
    v = adj_ones_;
}

// ------------------------------------------------------- HypersurfacePotential

HypersurfacePotential::HypersurfacePotential(std::size_t side, double smoothing)
    : grad_op_(side), delta_(smoothing) {
    if (delta_ < 0.0 || !std::isfinite(delta_))
        throw std::invalid_argument("HypersurfacePotential: smoothing must be >= 0");
}

Vec HypersurfacePotential::magnitudes(const Vec& x) const {
    const std::size_t m = grad_op_.side();
    const std::size_t n = m * m;
    const Vec d = grad_op_.apply(x);
    Vec w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = std::sqrt(d[i] * d[i] + d[n + i] * d[n + i] + delta_ * delta_);
    return w;
}

double HypersurfacePotential::value(const Vec& x) const {
    if (x.size() != dim())
        throw std::invalid_argument("HypersurfacePotential: dimension mismatch");
    const Vec w = magnitudes(x);
    double s = 0.0;
    for (double v : w) s += v;
    return s;
}

void HypersurfacePotential::gradient(const Vec& x, Vec& g) const {
    if (x.size() != dim())
        throw std::invalid_argument("HypersurfacePotential: dimension mismatch");
    const std::size_t n = dim();
    Vec d = grad_op_.apply(x);
    const Vec w = magnitudes(x);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] /= w[i];
        d[n + i] /= w[i];
    }
    grad_op_.adjoint(d, g);
}

void HypersurfacePotential::split_gradient(const Vec& x, Vec& u, Vec& v) const {
    if (x.size() != dim())
        throw std::invalid_argument("HypersurfacePotential: dimension mismatch");
    const std::size_t m = grad_op_.side();
    const Vec w = magnitudes(x);
    u.resize(dim());
    v.resize(dim());
    // gradient_{ij} = c_ij x_ij - n_ij with
    //   c_ij = 1/w_{i-1,j} + 2/w_{ij} + 1/w_{i,j-1}
    //   n_ij = x_{i-1,j}/w_{i-1,j} + x_{i,j-1}/w_{i,j-1}
    //        + (x_{i+1,j} + x_{i,j+1})/w_{ij}
    // so u = n (neighbor mass), v = c .* x.
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t im = (i == 0) ? m - 1 : i - 1;
        const std::size_t ip = (i + 1 == m) ? 0 : i + 1;
        for (std::size_t j = 0; j < m; ++j) {
            const std::size_t jm = (j == 0) ? m - 1 : j - 1;
            const std::size_t jp = (j + 1 == m) ? 0 : j + 1;
            const std::size_t idx = i * m + j;
            const double inv_up = 1.0 / w[im * m + j];
            const double inv_left = 1.0 / w[i * m + jm];
            const double inv_here = 1.0 / w[idx];
            u[idx] = x[im * m + j] * inv_up + x[i * m + jm] * inv_left +
                     (x[ip * m + j] + x[i * m + jp]) * inv_here;
            v[idx] = (inv_up + 2.0 * inv_here + inv_left) * x[idx];
        }
    }
}

// -------------------------------------------------------------- QuadraticForm

QuadraticForm::QuadraticForm(std::shared_ptr<const DenseOperator> c, Vec linear)
    : c_(std::move(c)), p_(std::move(linear)) {
    if (!c_) throw std::invalid_argument("QuadraticForm: null matrix");
    if (c_->rows() != c_->cols())
        throw std::invalid_argument("QuadraticForm: matrix must be square");
    if (p_.size() != c_->cols())
        throw std::invalid_argument("QuadraticForm: linear term size mismatch");
    const std::size_t n = c_->rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(c_->entry(i, j) - c_->entry(j, i)) > 1e-12)
                throw std::invalid_argument("QuadraticForm: matrix is not symmetric");
}

double QuadraticForm::value(const Vec& x) const {
    const Vec cx = c_->apply(x);
    return 0.5 * dot(x, cx) - dot(p_, x);
}

void QuadraticForm::gradient(const Vec& x, Vec& g) const {
    c_->apply(x, g);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= p_[i];
}

void QuadraticForm::split_gradient(const Vec& x, Vec& u, Vec& v) const {
    if (x.size() != dim())
        throw std::invalid_argument("QuadraticForm: dimension mismatch");
    const std::size_t n = c_->rows();
    u.assign(n, 0.0);
    v.assign(n, 0.0);
    // -grad = (p+ + C- x) - (p- + C+ x), with entrywise positive/negative parts.
    const Vec& a = c_->data();
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = a.data() + i * n;
        double pos = 0.0, neg = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double cij = row[j];
            if (cij >= 0.0)
                pos += cij * x[j];
            else
                neg -= cij * x[j];
        }
        u[i] = neg + (p_[i] > 0.0 ? p_[i] : 0.0);
        v[i] = pos + (p_[i] < 0.0 ? -p_[i] : 0.0);
    }
}

std::optional<double> QuadraticForm::lipschitz_bound() const {
    // Symmetric C: the spectral radius is bounded by the max absolute row sum.
    const std::size_t n = c_->rows();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += std::abs(c_->entry(i, j));
        if (s > best) best = s;
    }
    return best;
}

// --------------------------------------------------------------- SumObjective

SumObjective::SumObjective(std::shared_ptr<const SmoothObjective> left, double weight,
                           std::shared_ptr<const SmoothObjective> right)
    : left_(std::move(left)), right_(std::move(right)), weight_(weight) {
    if (!left_ || !right_) throw std::invalid_argument("SumObjective: null term");
    if (left_->dim() != right_->dim())
        throw std::invalid_argument("SumObjective: dimension mismatch");
    if (!(weight_ >= 0.0) || !std::isfinite(weight_))
        throw std::invalid_argument("SumObjective: weight must be >= 0");
}

double SumObjective::value(const Vec& x) const {
    return left_->value(x) + weight_ * right_->value(x);
}

void SumObjective::gradient(const Vec& x, Vec& g) const {
    left_->gradient(x, g);
    Vec gr;
    right_->gradient(x, gr);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] += weight_ * gr[i];
}

void SumObjective::split_gradient(const Vec& x, Vec& u, Vec& v) const {
    left_->split_gradient(x, u, v);
    Vec ur, vr;
    right_->split_gradient(x, ur, vr);
    for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] += weight_ * ur[i];
        v[i] += weight_ * vr[i];
    }
}

std::optional<double> SumObjective::lipschitz_bound() const {
    const auto l = left_->lipschitz_bound();
    const auto r = right_->lipschitz_bound();
    if (l && r) return *l + weight_ * *r;
    return std::nullopt;
}

} // namespace vmfb
