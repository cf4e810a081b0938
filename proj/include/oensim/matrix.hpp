#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oensim {

// Dense row-major double matrix. Small and deliberately plain; everything in
// this project is desk scale.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Matrix hadamard(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Values uniform in [lo, hi], seeded stream.
Matrix random_uniform(std::size_t rows, std::size_t cols, std::uint64_t seed, double lo = -1.0,
                      double hi = 1.0);
Matrix random_normal(std::size_t rows, std::size_t cols, std::uint64_t seed, double mean = 0.0,
                     double stddev = 1.0);

// Binary matrix file: 4-byte magic "OENM", uint32 version (1), uint64 rows,
// uint64 cols, then rows*cols little-endian float64 in row-major order.
void write_matrix_file(const std::string& path, const Matrix& m);
Matrix read_matrix_file(const std::string& path);

}  // namespace oensim
