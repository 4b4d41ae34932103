#include "vmfb/vec.hpp"

#include <algorithm>
#include <cmath>

namespace vmfb {

double dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return std::sqrt(norm2_sq(a)); }

double norm2_sq(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return s;
}

double norm_inf(const Vec& a) {
    double s = 0.0;
    for (double v : a) s = std::max(s, std::abs(v));
    return s;
}

double sum(const Vec& a) {
    double s = 0.0;
    for (double v : a) s += v;
    return s;
}

Vec sub(const Vec& a, const Vec& b) {
    check_same_dim(a, b, "sub");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec add_scaled(const Vec& a, double s, const Vec& b) {
    check_same_dim(a, b, "add_scaled");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
    return out;
}

bool all_finite(const Vec& a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

bool all_nonneg(const Vec& a) {
    for (double v : a)
        if (v < 0.0) return false;
    return true;
}

Vec clamp_nonneg(const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] > 0.0 ? a[i] : 0.0;
    return out;
}

} // namespace vmfb
