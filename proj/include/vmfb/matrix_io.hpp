#pragma once

#include <cstdint>
#include <filesystem>

#include "vmfb/vec.hpp"

namespace vmfb {

/// On-disk matrix container: magic "VMFB", uint32 rows, uint32 cols, then
/// rows*cols float64 values, row-major, all little-endian.
struct MatrixFile {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    Vec data;
};

/// Writes the container. Throws std::runtime_error on I/O failure and
/// std::invalid_argument if data.size() != rows * cols.
void save_matrix(const std::filesystem::path& path, std::uint32_t rows,
                 std::uint32_t cols, const Vec& data);

/// Reads the container. Throws std::runtime_error on I/O failure, bad magic,
/// or truncated payload.
MatrixFile load_matrix(const std::filesystem::path& path);

} // namespace vmfb
