#pragma once

#include "rif/iforest.hpp"
#include "rif/rotation.hpp"

namespace rif {

struct RotatedForest {
    ForestParams params;
    // Tree i was built on its subsample right-multiplied by rotations[i].
    std::vector<ITree> trees;
    std::vector<RotationMatrix> rotations;
    uint32_t dim = 0;
    uint32_t psi_effective = 0;
};

// Per-tree Haar-random rotation of the subsample, then a standard axis-aligned
// iTree on the rotated points.
RotatedForest fit_rif(const Matrix& points, const ForestParams& params);

// Probes are rotated lazily by each tree's stored matrix before descent; the
// per-tree path lengths are combined exactly as in score_iforest.
double score_rif(const RotatedForest& forest, std::span<const double> x);

std::vector<double> score_batch(const RotatedForest& forest, const Matrix& points);

struct StorageFootprint {
    uint64_t internal_nodes = 0;
    uint64_t node_values = 0;     // 2 per internal node (dimension + value)
    uint64_t rotation_values = 0; // t * d^2
};

StorageFootprint storage_footprint(const RotatedForest& forest);

namespace detail {
// Identity-rotation variant used to validate the reduction to fit_iforest.
RotatedForest fit_rif_identity_rotations(const Matrix& points, const ForestParams& params);
}  // namespace detail

}  // namespace rif
