#include "rif/iforest.hpp"

#include <cmath>
#include <stdexcept>

#include "rif/forest_detail.hpp"

namespace rif {

uint32_t effective_depth_limit(const ForestParams& params, uint32_t psi_effective) {
    if (params.depth_limit > 0) return params.depth_limit;
    return static_cast<uint32_t>(
        std::ceil(std::log2(std::max<uint32_t>(psi_effective, 2))));
}

double normalize_path_score(double mean_path_length, uint32_t psi_effective) {
    const double denom = c_factor(psi_effective);
    if (denom <= 0.0) return 1.0;
    return std::exp2(-mean_path_length / denom);
}

namespace detail {

Matrix subsample(const Matrix& points, uint32_t psi, Rng& rng) {
    const size_t k = std::min<size_t>(psi, points.rows());
    const auto idx = rng.sample_without_replacement(points.rows(), k);
    Matrix out(k, points.cols());
    for (size_t i = 0; i < k; ++i) {
        const auto src = points.row(idx[i]);
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

}  // namespace detail

IsolationForest fit_iforest(const Matrix& points, const ForestParams& params) {
    if (points.rows() < 2) throw std::invalid_argument("need at least two points");
    if (params.trees < 1 || params.psi < 2)
        throw std::invalid_argument("invalid forest parameters");

    IsolationForest forest;
    forest.params = params;
    forest.dim = static_cast<uint32_t>(points.cols());
    forest.psi_effective =
        static_cast<uint32_t>(std::min<size_t>(params.psi, points.rows()));
    const uint32_t depth = effective_depth_limit(params, forest.psi_effective);

    const Rng master(params.seed);
    forest.trees.reserve(params.trees);
    for (uint32_t i = 0; i < params.trees; ++i) {
        const Rng tree_rng = master.substream(i);
        Rng sample_rng = tree_rng.substream(detail::STREAM_SAMPLE);
        const Matrix sample = detail::subsample(points, params.psi, sample_rng);
        forest.trees.push_back(
            build_tree(sample, depth, draw_axis_split, tree_rng.substream(detail::STREAM_BUILD)));
    }
    return forest;
}

double score_iforest(const IsolationForest& forest, std::span<const double> x) {
    if (x.size() != forest.dim) throw std::invalid_argument("probe dimension mismatch");
    double total = 0.0;
    for (const ITree& tree : forest.trees) total += path_length(tree, x);
    return normalize_path_score(total / static_cast<double>(forest.trees.size()),
                                forest.psi_effective);
}

std::vector<double> score_batch(const IsolationForest& forest, const Matrix& points) {
    std::vector<double> out;
    out.reserve(points.rows());
    for (size_t i = 0; i < points.rows(); ++i)
        out.push_back(score_iforest(forest, points.row(i)));
    return out;
}

}  // namespace rif
