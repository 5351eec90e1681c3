#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <vector>

namespace rif {

// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(size_t d) {
        Matrix m(d, d);
        for (size_t i = 0; i < d; ++i) m(i, i) = 1.0;
        return m;
    }

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }

    double& operator()(size_t r, size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    double operator()(size_t r, size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<double> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    std::vector<double>& data() noexcept { return data_; }
    const std::vector<double>& data() const noexcept { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);

// In-place per-column z-score: subtract the column mean and divide by the
// population standard deviation (constant columns are left centered only).
void standardize_columns(Matrix& m);
Matrix transpose(const Matrix& m);

// out[j] = sum_i x[i] * m(i, j), i.e. the row vector x right-multiplied by m.
std::vector<double> vecmat(std::span<const double> x, const Matrix& m);

}  // namespace rif
