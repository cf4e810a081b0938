#include "oensim/matrix.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "oensim/rng.hpp"

namespace oensim {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dimensions differ");
    Matrix y(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* brow = &b.data[k * b.cols];
            double* yrow = &y.data[i * y.cols];
            for (std::size_t j = 0; j < b.cols; ++j) yrow[j] += aik * brow[j];
        }
    }
    return y;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("hadamard: shape mismatch");
    Matrix y = a;
    for (std::size_t i = 0; i < y.data.size(); ++i) y.data[i] *= b.data[i];
    return y;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("add: shape mismatch");
    Matrix y = a;
    for (std::size_t i = 0; i < y.data.size(); ++i) y.data[i] += b.data[i];
    return y;
}

Matrix scale(const Matrix& a, double s) {
    Matrix y = a;
    for (double& v : y.data) v *= s;
    return y;
}

double max_abs(const Matrix& m) {
    double r = 0.0;
    for (double v : m.data) r = std::max(r, std::abs(v));
    return r;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("max_abs_diff: shape mismatch");
    double r = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        r = std::max(r, std::abs(a.data[i] - b.data[i]));
    return r;
}

Matrix random_uniform(std::size_t rows, std::size_t cols, std::uint64_t seed, double lo, double hi) {
    Matrix m(rows, cols);
    auto rng = make_stream(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    for (double& v : m.data) v = dist(rng);
    return m;
}

Matrix random_normal(std::size_t rows, std::size_t cols, std::uint64_t seed, double mean,
                     double stddev) {
    Matrix m(rows, cols);
    auto rng = make_stream(seed);
    std::normal_distribution<double> dist(mean, stddev);
    for (double& v : m.data) v = dist(rng);
    return m;
}

namespace {
constexpr char kMagic[4] = {'O', 'E', 'N', 'M'};
constexpr std::uint32_t kVersion = 1;
}  // namespace

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(kMagic, 4);
    std::uint32_t ver = kVersion;
    std::uint64_t r = m.rows, c = m.cols;
    f.write(reinterpret_cast<const char*>(&ver), sizeof(ver));
    f.write(reinterpret_cast<const char*>(&r), sizeof(r));
    f.write(reinterpret_cast<const char*>(&c), sizeof(c));
    f.write(reinterpret_cast<const char*>(m.data.data()),
            static_cast<std::streamsize>(m.data.size() * sizeof(double)));
    if (!f) throw std::runtime_error("write failed: " + path);
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    char magic[4];
    std::uint32_t ver = 0;
    std::uint64_t r = 0, c = 0;
    f.read(magic, 4);
    f.read(reinterpret_cast<char*>(&ver), sizeof(ver));
    f.read(reinterpret_cast<char*>(&r), sizeof(r));
    f.read(reinterpret_cast<char*>(&c), sizeof(c));
    if (!f || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("not a matrix file (bad magic): " + path);
    if (ver != kVersion) throw std::runtime_error("unsupported matrix file version");
    Matrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    f.read(reinterpret_cast<char*>(m.data.data()),
           static_cast<std::streamsize>(m.data.size() * sizeof(double)));
    if (!f) throw std::runtime_error("truncated matrix file: " + path);
    return m;
}

}  // namespace oensim
