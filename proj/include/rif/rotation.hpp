#pragma once

#include "rif/matrix.hpp"
#include "rif/rng.hpp"

namespace rif {

// d x d orthogonal matrix with determinant +1.
struct RotationMatrix {
    size_t dim = 0;
    Matrix q;

    static RotationMatrix identity(size_t d) { return {d, Matrix::identity(d)}; }
};

// d x d matrix with independent N(0,1) entries.
Matrix random_gaussian_matrix(Rng& rng, size_t d);

struct QrResult {
    Matrix q;
    Matrix r;
};

// Householder QR with the diagonal of R normalized non-negative (the sign is
// folded into the corresponding column of Q). Entries of R below the diagonal
// are exactly zero.
QrResult qr_decompose(const Matrix& a);

// Haar-uniform draw from SO(d): QR of a Gaussian matrix with the r-diagonal
// sign convention, then a sign flip of column 0 if the determinant is -1.
RotationMatrix random_rotation(Rng& rng, size_t d);

double rotation_determinant(const RotationMatrix& rot);

// Right-multiplies every row of points by rot.q.
// Throws std::invalid_argument on dimension mismatch.
Matrix rotate_points(const Matrix& points, const RotationMatrix& rot);

std::vector<double> rotate_point(std::span<const double> x, const RotationMatrix& rot);

}  // namespace rif
