#pragma once

#include <complex>
#include <cstddef>
#include <memory>

#include "vmfb/vec.hpp"

namespace vmfb {

/// Abstract linear map A : R^n -> R^m with its adjoint.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;

    virtual std::size_t input_dim() const = 0;
    virtual std::size_t output_dim() const = 0;

    /// out = A x. Throws std::invalid_argument on dimension mismatch.
    virtual void apply(const Vec& x, Vec& out) const = 0;

    /// out = A^T y. Throws std::invalid_argument on dimension mismatch.
    virtual void adjoint(const Vec& y, Vec& out) const = 0;

    Vec apply(const Vec& x) const;
    Vec adjoint(const Vec& y) const;

protected:
    void check_input(const Vec& x) const;
    void check_output(const Vec& y) const;
};

/// Dense row-major matrix operator.
class DenseOperator final : public LinearOperator {
public:
    /// entries.size() must equal rows * cols (row-major).
    /// With require_nonneg, every entry must be >= 0 and every row and every
    /// column must contain at least one strictly positive entry.
    DenseOperator(std::size_t rows, std::size_t cols, Vec entries,
                  bool require_nonneg = false);

    std::size_t input_dim() const override { return cols_; }
    std::size_t output_dim() const override { return rows_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double entry(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const Vec& data() const { return a_; }
    bool nonneg() const { return nonneg_; }

    void apply(const Vec& x, Vec& out) const override;
    void adjoint(const Vec& y, Vec& out) const override;

    using LinearOperator::adjoint;
    using LinearOperator::apply;

private:
    std::size_t rows_, cols_;
    Vec a_;
    bool nonneg_;
};

/// Shared FFTW-backed complex 2D FFT of fixed size m x m.
///
/// forward() is the unscaled DFT; inverse() is the unscaled conjugate
/// transform, so inverse(forward(x)) == (m*m) * x.
class Fft2D {
public:
    explicit Fft2D(std::size_t m);
    ~Fft2D();
    Fft2D(const Fft2D&) = delete;
    Fft2D& operator=(const Fft2D&) = delete;

    std::size_t size() const { return m_; }

    void forward(const std::complex<double>* in, std::complex<double>* out) const;
    void inverse(const std::complex<double>* in, std::complex<double>* out) const;

private:
    std::size_t m_;
    void* fwd_; // fftw_plan
    void* bwd_;
};

/// Circulant 2D convolution on m x m images (periodic boundary), diagonalized
/// by the FFT. Symmetric PSFs give a self-adjoint operator; the adjoint uses
/// the conjugate spectrum, so it is exact for any PSF.
class CirculantConvolution final : public LinearOperator {
public:
    /// PSF given with its kernel origin at the array center (floor(m/2) in
    /// both coordinates): a delta at the center is the identity.
    static CirculantConvolution from_centered_psf(std::size_t m, const Vec& psf);

    /// PSF given with its kernel origin at index (0, 0).
    static CirculantConvolution from_origin_psf(std::size_t m, const Vec& psf);

    std::size_t input_dim() const override { return m_ * m_; }
    std::size_t output_dim() const override { return m_ * m_; }
    std::size_t side() const { return m_; }

    void apply(const Vec& x, Vec& out) const override;
    void adjoint(const Vec& y, Vec& out) const override;

    using LinearOperator::adjoint;
    using LinearOperator::apply;

private:
    CirculantConvolution(std::size_t m, std::vector<std::complex<double>> spectrum);
    void convolve(const Vec& x, Vec& out, bool conjugate) const;

    std::size_t m_;
    std::vector<std::complex<double>> spectrum_;
    std::shared_ptr<Fft2D> fft_;
};

/// Periodic first-difference gradient on m x m images.
///
/// Input: image of length m*m, row-major with index i*m + j.
/// Output: length 2*m*m; the first block holds vertical differences
/// x[i+1,j] - x[i,j], the second horizontal differences x[i,j+1] - x[i,j],
/// both with wraparound. The adjoint is the negative periodic divergence.
class DiscreteGradient final : public LinearOperator {
public:
    explicit DiscreteGradient(std::size_t m);

    std::size_t input_dim() const override { return m_ * m_; }
    std::size_t output_dim() const override { return 2 * m_ * m_; }
    std::size_t side() const { return m_; }

    void apply(const Vec& x, Vec& out) const override;
    void adjoint(const Vec& y, Vec& out) const override;

    using LinearOperator::adjoint;
    using LinearOperator::apply;

private:
    std::size_t m_;
};

} // namespace vmfb
