#include "vmfb/linops.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

#include "vmfb/errors.hpp"

namespace vmfb {

namespace {
// FFTW's planner is not thread-safe; execution through the new-array API is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

// ---------------------------------------------------------------- LinearOperator

Vec LinearOperator::apply(const Vec& x) const {
    Vec out(output_dim());
    apply(x, out);
    return out;
}

Vec LinearOperator::adjoint(const Vec& y) const {
    Vec out(input_dim());
    adjoint(y, out);
    return out;
}

void LinearOperator::check_input(const Vec& x) const {
    if (x.size() != input_dim())
        throw std::invalid_argument("LinearOperator::apply: expected dimension " +
                                    std::to_string(input_dim()) + ", got " +
                                    std::to_string(x.size()));
}

void LinearOperator::check_output(const Vec& y) const {
    if (y.size() != output_dim())
        throw std::invalid_argument("LinearOperator::adjoint: expected dimension " +
                                    std::to_string(output_dim()) + ", got " +
                                    std::to_string(y.size()));
}

// ----------------------------------------------------------------- DenseOperator

DenseOperator::DenseOperator(std::size_t rows, std::size_t cols, Vec entries,
                             bool require_nonneg)
    : rows_(rows), cols_(cols), a_(std::move(entries)), nonneg_(require_nonneg) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("DenseOperator: empty shape");
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("DenseOperator: entry count " +
                                    std::to_string(a_.size()) + " does not match " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_));
    if (require_nonneg) {
        std::vector<char> row_pos(rows_, 0), col_pos(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const double v = a_[i * cols_ + j];
                if (v < 0.0)
                    throw std::invalid_argument("DenseOperator: negative entry at (" +
                                                std::to_string(i) + "," +
                                                std::to_string(j) + ")");
                if (v > 0.0) row_pos[i] = col_pos[j] = 1;
            }
        if (std::find(row_pos.begin(), row_pos.end(), 0) != row_pos.end())
            throw std::invalid_argument("DenseOperator: a row has no positive entry");
        if (std::find(col_pos.begin(), col_pos.end(), 0) != col_pos.end())
            throw std::invalid_argument("DenseOperator: a column has no positive entry");
    }
}

void DenseOperator::apply(const Vec& x, Vec& out) const {
    check_input(x);
    out.assign(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* row = a_.data() + i * cols_;
        double s = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) s += row[j] * x[j];
        out[i] = s;
    }
}

void DenseOperator::adjoint(const Vec& y, Vec& out) const {
    check_output(y);
    out.assign(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const double* row = a_.data() + i * cols_;
        const double yi = y[i];
        if (yi == 0.0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] += row[j] * yi;
    }
}

// ------------------------------------------------------------------------ Fft2D

Fft2D::Fft2D(std::size_t m) : m_(m) {
    if (m_ == 0) throw std::invalid_argument("Fft2D: m == 0");
    const int n = static_cast<int>(m_);
    std::vector<std::complex<double>> a(m_ * m_), b(m_ * m_);
    std::lock_guard<std::mutex> lock(planner_mutex());
    // FFTW_UNALIGNED so plans may be executed on any heap buffer later.
    fwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                            reinterpret_cast<fftw_complex*>(b.data()), FFTW_FORWARD,
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
    bwd_ = fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(a.data()),
                            reinterpret_cast<fftw_complex*>(b.data()), FFTW_BACKWARD,
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (fwd_ == nullptr || bwd_ == nullptr)
        throw numerical_failure("Fft2D: FFTW plan creation failed");
}

Fft2D::~Fft2D() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(bwd_));
}

void Fft2D::forward(const std::complex<double>* in, std::complex<double>* out) const {
    // Out-of-place c2c transforms leave the input intact.
    fftw_execute_dft(static_cast<fftw_plan>(fwd_),
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void Fft2D::inverse(const std::complex<double>* in, std::complex<double>* out) const {
    fftw_execute_dft(static_cast<fftw_plan>(bwd_),
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

// ---------------------------------------------------------- CirculantConvolution

CirculantConvolution CirculantConvolution::from_centered_psf(std::size_t m,
                                                             const Vec& psf) {
    if (psf.size() != m * m)
        throw std::invalid_argument("CirculantConvolution: PSF size " +
                                    std::to_string(psf.size()) + " != " +
                                    std::to_string(m) + "^2");
    // ifftshift: move the kernel origin from the array center to (0, 0).
    const std::size_t c = m / 2;
    Vec shifted(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            shifted[i * m + j] = psf[((i + c) % m) * m + ((j + c) % m)];
    return from_origin_psf(m, shifted);
}

CirculantConvolution CirculantConvolution::from_origin_psf(std::size_t m,
                                                           const Vec& psf) {
    if (psf.size() != m * m)
        throw std::invalid_argument("CirculantConvolution: PSF size " +
                                    std::to_string(psf.size()) + " != " +
                                    std::to_string(m) + "^2");
    Fft2D fft(m);
    std::vector<std::complex<double>> in(m * m), spectrum(m * m);
    for (std::size_t i = 0; i < m * m; ++i) in[i] = psf[i];
    fft.forward(in.data(), spectrum.data());
    return CirculantConvolution(m, std::move(spectrum));
}

CirculantConvolution::CirculantConvolution(std::size_t m,
                                           std::vector<std::complex<double>> spectrum)
    : m_(m), spectrum_(std::move(spectrum)), fft_(std::make_shared<Fft2D>(m)) {}

void CirculantConvolution::convolve(const Vec& x, Vec& out, bool conjugate) const {
    const std::size_t n = m_ * m_;
    std::vector<std::complex<double>> buf(n), hat(n);
    for (std::size_t i = 0; i < n; ++i) buf[i] = x[i];
    fft_->forward(buf.data(), hat.data());
    if (conjugate) {
        for (std::size_t i = 0; i < n; ++i) hat[i] *= std::conj(spectrum_[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) hat[i] *= spectrum_[i];
    }
    fft_->inverse(hat.data(), buf.data());
    const double scale = 1.0 / static_cast<double>(n);
    out.resize(n);
    double max_abs = 0.0, max_imag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = buf[i].real() * scale;
        max_abs = std::max(max_abs, std::abs(out[i]));
        max_imag = std::max(max_imag, std::abs(buf[i].imag()) * scale);
    }
    if (max_imag > 1e-10 * std::max(1.0, max_abs))
        throw numerical_failure("CirculantConvolution: imaginary residue " +
                                std::to_string(max_imag) + " exceeds tolerance");
}

void CirculantConvolution::apply(const Vec& x, Vec& out) const {
    check_input(x);
    convolve(x, out, /*conjugate=*/false);
}

void CirculantConvolution::adjoint(const Vec& y, Vec& out) const {
    check_output(y);
    convolve(y, out, /*conjugate=*/true);
}

// -------------------------------------------------------------- DiscreteGradient

DiscreteGradient::DiscreteGradient(std::size_t m) : m_(m) {
    if (m_ == 0) throw std::invalid_argument("DiscreteGradient: m == 0");
}

void DiscreteGradient::apply(const Vec& x, Vec& out) const {
    check_input(x);
    const std::size_t n = m_ * m_;
    out.resize(2 * n);
    for (std::size_t i = 0; i < m_; ++i) {
        const std::size_t ip = (i + 1 == m_) ? 0 : i + 1;
        for (std::size_t j = 0; j < m_; ++j) {
            const std::size_t jp = (j + 1 == m_) ? 0 : j + 1;
            const std::size_t idx = i * m_ + j;
            out[idx] = x[ip * m_ + j] - x[idx];      // vertical difference
            out[n + idx] = x[i * m_ + jp] - x[idx];  // horizontal difference
        }
    }
}

void DiscreteGradient::adjoint(const Vec& y, Vec& out) const {
    check_output(y);
    const std::size_t n = m_ * m_;
    out.resize(n);
    for (std::size_t i = 0; i < m_; ++i) {
        const std::size_t im = (i == 0) ? m_ - 1 : i - 1;
        for (std::size_t j = 0; j < m_; ++j) {
            const std::size_t jm = (j == 0) ? m_ - 1 : j - 1;
            const std::size_t idx = i * m_ + j;
            out[idx] = y[im * m_ + j] - y[idx] + y[n + i * m_ + jm] - y[n + idx];
        }
    }
}

} // namespace vmfb
