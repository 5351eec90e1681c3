#include "rif/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace rif {

Matrix random_gaussian_matrix(Rng& rng, size_t d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    Matrix a(d, d);
    for (auto& x : a.data()) x = rng.standard_normal();
    return a;
}

QrResult qr_decompose(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("qr_decompose expects a square matrix");
    const size_t d = a.rows();
    Matrix r = a;
    Matrix q = Matrix::identity(d);
    std::vector<double> v(d);

    for (size_t k = 0; k < d; ++k) {
        // Householder reflector zeroing r(k+1.., k).
        double norm2 = 0.0;
        for (size_t i = k; i < d; ++i) norm2 += r(i, k) * r(i, k);
        const double norm = std::sqrt(norm2);
        if (norm == 0.0) continue;  // rank-deficient column: keep e_k direction

        const double alpha = (r(k, k) >= 0.0) ? -norm : norm;
        double vnorm2 = 0.0;
        for (size_t i = k; i < d; ++i) {
            v[i] = r(i, k);
            if (i == k) v[i] -= alpha;
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // r <- H r
        for (size_t j = k; j < d; ++j) {
            double dot = 0.0;
            for (size_t i = k; i < d; ++i) dot += v[i] * r(i, j);
            const double s = beta * dot;
            for (size_t i = k; i < d; ++i) r(i, j) -= s * v[i];
        }
        // q <- q H  (accumulates Q = H_0 H_1 ... H_{d-1})
        for (size_t i = 0; i < d; ++i) {
            double dot = 0.0;
            for (size_t j = k; j < d; ++j) dot += q(i, j) * v[j];
            const double s = beta * dot;
            for (size_t j = k; j < d; ++j) q(i, j) -= s * v[j];
        }
    }

    // Non-negative diagonal of R; the sign moves into the matching column of Q.
    for (size_t j = 0; j < d; ++j) {
        if (r(j, j) < 0.0) {
            for (size_t c = j; c < d; ++c) r(j, c) = -r(j, c);
            for (size_t i = 0; i < d; ++i) q(i, j) = -q(i, j);
        }
        for (size_t i = j + 1; i < d; ++i) r(i, j) = 0.0;
    }
    return {std::move(q), std::move(r)};
}

double rotation_determinant(const RotationMatrix& rot) {
    // Gaussian elimination with partial pivoting; d is small enough here.
    Matrix m = rot.q;
    const size_t d = m.rows();
    double det = 1.0;
    for (size_t k = 0; k < d; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < d; ++i)
            if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
        if (m(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (size_t j = 0; j < d; ++j) std::swap(m(piv, j), m(k, j));
            det = -det;
        }
        det *= m(k, k);
        for (size_t i = k + 1; i < d; ++i) {
            const double f = m(i, k) / m(k, k);
            for (size_t j = k; j < d; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

RotationMatrix random_rotation(Rng& rng, size_t d) {
    Matrix a = random_gaussian_matrix(rng, d);
    QrResult qr = qr_decompose(a);
    RotationMatrix rot{d, std::move(qr.q)};
    if (rotation_determinant(rot) < 0.0) {
        // Flip the sign of column 0 to land in SO(d).
        for (size_t i = 0; i < d; ++i) rot.q(i, 0) = -rot.q(i, 0);
    }
    return rot;
}

Matrix rotate_points(const Matrix& points, const RotationMatrix& rot) {
    if (points.cols() != rot.dim) throw std::invalid_argument("rotation dimension mismatch");
    return matmul(points, rot.q);
}

std::vector<double> rotate_point(std::span<const double> x, const RotationMatrix& rot) {
    if (x.size() != rot.dim) throw std::invalid_argument("rotation dimension mismatch");
    return vecmat(x, rot.q);
}

}  // namespace rif
