#include "rif/eif.hpp"

#include <cmath>
#include <stdexcept>

#include "rif/forest_detail.hpp"

namespace rif {

std::optional<SplitRule> draw_hyperplane(const Matrix& points,
                                         std::span<const size_t> rows, Rng& rng) {
    const size_t d = points.cols();
    // Perpendicular bisector of two points drawn from the node: the normal is
    // their difference direction and the plane passes through their midpoint.
    // Both generators land strictly on opposite sides, so every accepted cut
    // separates the node. Coincident picks are redrawn up to 8 times.
    for (int attempt = 0; attempt < 8; ++attempt) {
        const size_t a = rows[rng.next_below(rows.size())];
        const size_t b = rows[rng.next_below(rows.size())];
        if (a == b) continue;
        const auto ra = points.row(a);
        const auto rb = points.row(b);
        HyperplaneSplit hp;
        hp.normal.resize(d);
        hp.intercept.resize(d);
        double norm2 = 0.0;
        for (size_t j = 0; j < d; ++j) {
            hp.normal[j] = ra[j] - rb[j];
            norm2 += hp.normal[j] * hp.normal[j];
            hp.intercept[j] = 0.5 * (ra[j] + rb[j]);
        }
        if (norm2 == 0.0) continue;  // distinct rows holding identical points
        const double inv = 1.0 / std::sqrt(norm2);
        for (size_t j = 0; j < d; ++j) hp.normal[j] *= inv;
        return SplitRule{hp};
    }
    return std::nullopt;
}

ExtendedForest fit_eif(const Matrix& points, const ForestParams& params) {
    if (points.rows() < 2) throw std::invalid_argument("need at least two points");
    if (params.trees < 1 || params.psi < 2)
        throw std::invalid_argument("invalid forest parameters");

    ExtendedForest forest;
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
            build_tree(sample, depth, draw_hyperplane, tree_rng.substream(detail::STREAM_BUILD)));
    }
    return forest;
}

double score_eif(const ExtendedForest& forest, std::span<const double> x) {
    if (x.size() != forest.dim) throw std::invalid_argument("probe dimension mismatch");
    double total = 0.0;
    for (const ITree& tree : forest.trees) total += path_length(tree, x);
    return normalize_path_score(total / static_cast<double>(forest.trees.size()),
                                forest.psi_effective);
}

std::vector<double> score_batch(const ExtendedForest& forest, const Matrix& points) {
    std::vector<double> out;
    out.reserve(points.rows());
    for (size_t i = 0; i < points.rows(); ++i)
        out.push_back(score_eif(forest, points.row(i)));
    return out;
}

}  // namespace rif
