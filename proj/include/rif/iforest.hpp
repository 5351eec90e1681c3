#pragma once

#include <cstdint>
#include <vector>

#include "rif/matrix.hpp"
#include "rif/tree.hpp"

namespace rif {

struct ForestParams {
    uint32_t trees = 100;
    uint32_t psi = 256;
    uint32_t depth_limit = 0;  // 0 = auto: ceil(log2(effective psi))
    uint64_t seed = 0;
};

uint32_t effective_depth_limit(const ForestParams& params, uint32_t psi_effective);

struct IsolationForest {
    ForestParams params;
    std::vector<ITree> trees;
    uint32_t dim = 0;
    uint32_t psi_effective = 0;  // per-tree training size, min(psi, n)
};

// Ensemble of axis-aligned iTrees over uniform subsamples.
// Throws std::invalid_argument when points has fewer than two rows.
IsolationForest fit_iforest(const Matrix& points, const ForestParams& params);

double score_iforest(const IsolationForest& forest, std::span<const double> x);

std::vector<double> score_batch(const IsolationForest& forest, const Matrix& points);

// Score normalization shared by all three algorithms: 2^(-mean_path / c(psi)).
double normalize_path_score(double mean_path_length, uint32_t psi_effective);

}  // namespace rif
