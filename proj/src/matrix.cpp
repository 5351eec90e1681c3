#include "rif/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace rif {

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

void standardize_columns(Matrix& m) {
    if (m.rows() == 0) return;
    const double n = static_cast<double>(m.rows());
    for (size_t j = 0; j < m.cols(); ++j) {
        double mean = 0.0;
        for (size_t i = 0; i < m.rows(); ++i) mean += m(i, j);
        mean /= n;
        double var = 0.0;
        for (size_t i = 0; i < m.rows(); ++i) {
            const double d = m(i, j) - mean;
            var += d * d;
        }
        const double sd = std::sqrt(var / n);
        const double inv = sd > 0.0 ? 1.0 / sd : 1.0;
        for (size_t i = 0; i < m.rows(); ++i) m(i, j) = (m(i, j) - mean) * inv;
    }
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

std::vector<double> vecmat(std::span<const double> x, const Matrix& m) {
    if (x.size() != m.rows()) throw std::invalid_argument("vecmat shape mismatch");
    std::vector<double> out(m.cols(), 0.0);
    for (size_t i = 0; i < m.rows(); ++i) {
        const double xi = x[i];
        for (size_t j = 0; j < m.cols(); ++j) out[j] += xi * m(i, j);
    }
    return out;
}

}  // namespace rif
