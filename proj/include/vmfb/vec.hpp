#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmfb {

using Vec = std::vector<double>;

inline void check_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
}

double dot(const Vec& a, const Vec& b);

/// Euclidean norm.
double norm2(const Vec& a);

double norm2_sq(const Vec& a);

double norm_inf(const Vec& a);

double sum(const Vec& a);

/// a - b
Vec sub(const Vec& a, const Vec& b);

/// a + s * b
Vec add_scaled(const Vec& a, double s, const Vec& b);

bool all_finite(const Vec& a);

bool all_nonneg(const Vec& a);

/// Componentwise max(a, 0).
Vec clamp_nonneg(const Vec& a);

} // namespace vmfb
