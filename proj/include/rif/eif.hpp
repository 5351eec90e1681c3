#pragma once

#include "rif/iforest.hpp"

namespace rif {

struct ExtendedForest {
    ForestParams params;
    std::vector<ITree> trees;  // internal nodes carry HyperplaneSplit rules
    uint32_t dim = 0;
    uint32_t psi_effective = 0;
};

// Hyperplane cut through the node: the perpendicular bisector of two points
// drawn uniformly from the node, i.e. unit normal along their difference and
// the plane through their midpoint. Redraws up to 8 times on coincident picks,
// then declines (making the node a leaf).
std::optional<SplitRule> draw_hyperplane(const Matrix& points,
                                         std::span<const size_t> rows, Rng& rng);

ExtendedForest fit_eif(const Matrix& points, const ForestParams& params);

double score_eif(const ExtendedForest& forest, std::span<const double> x);

std::vector<double> score_batch(const ExtendedForest& forest, const Matrix& points);

}  // namespace rif
