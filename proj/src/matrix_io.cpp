#include "vmfb/matrix_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace vmfb {

static_assert(std::endian::native == std::endian::little,
              "matrix_io assumes a little-endian host");

namespace {
constexpr char kMagic[4] = {'V', 'M', 'F', 'B'};
}

void save_matrix(const std::filesystem::path& path, std::uint32_t rows,
                 std::uint32_t cols, const Vec& data) {
    if (data.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("save_matrix: data size " +
                                    std::to_string(data.size()) + " != " +
                                    std::to_string(rows) + "*" + std::to_string(cols));
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("save_matrix: cannot open " + path.string());
    f.write(kMagic, 4);
    f.write(reinterpret_cast<const char*>(&rows), 4);
    f.write(reinterpret_cast<const char*>(&cols), 4);
    f.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size() * sizeof(double)));
    f.flush();
    if (!f) throw std::runtime_error("save_matrix: write failed for " + path.string());
}

MatrixFile load_matrix(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_matrix: cannot open " + path.string());
    char magic[4] = {};
    f.read(magic, 4);
    if (!f || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("load_matrix: bad magic in " + path.string());
    MatrixFile out;
    f.read(reinterpret_cast<char*>(&out.rows), 4);
    f.read(reinterpret_cast<char*>(&out.cols), 4);
    if (!f) throw std::runtime_error("load_matrix: truncated header in " + path.string());
    const std::size_t n = static_cast<std::size_t>(out.rows) * out.cols;
    out.data.resize(n);
    f.read(reinterpret_cast<char*>(out.data.data()),
           static_cast<std::streamsize>(n * sizeof(double)));
    if (!f || static_cast<std::size_t>(f.gcount()) != n * sizeof(double))
        throw std::runtime_error("load_matrix: truncated payload in " + path.string());
    return out;
}

} // namespace vmfb
