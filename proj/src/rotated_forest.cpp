#include "rif/rotated_forest.hpp"

#include <stdexcept>

#include "rif/forest_detail.hpp"

namespace rif {

namespace {

using RotationSource = RotationMatrix (*)(Rng&, size_t);

RotationMatrix haar_rotation(Rng& rng, size_t d) { return random_rotation(rng, d); }

RotationMatrix identity_rotation(Rng&, size_t d) { return RotationMatrix::identity(d); }

RotatedForest fit_impl(const Matrix& points, const ForestParams& params,
                       RotationSource draw_rotation) {
    if (points.rows() < 2) throw std::invalid_argument("need at least two points");
    if (params.trees < 1 || params.psi < 2)
        throw std::invalid_argument("invalid forest parameters");

    RotatedForest forest;
    forest.params = params;
    forest.dim = static_cast<uint32_t>(points.cols());
    forest.psi_effective =
        static_cast<uint32_t>(std::min<size_t>(params.psi, points.rows()));
    const uint32_t depth = effective_depth_limit(params, forest.psi_effective);

    const Rng master(params.seed);
    forest.trees.reserve(params.trees);
    forest.rotations.reserve(params.trees);
    for (uint32_t i = 0; i < params.trees; ++i) {
        const Rng tree_rng = master.substream(i);
        Rng rotation_rng = tree_rng.substream(detail::STREAM_ROTATION);
        RotationMatrix rotation = draw_rotation(rotation_rng, points.cols());

        Rng sample_rng = tree_rng.substream(detail::STREAM_SAMPLE);
        const Matrix sample = detail::subsample(points, params.psi, sample_rng);
        const Matrix rotated = rotate_points(sample, rotation);

        forest.trees.push_back(build_tree(rotated, depth, draw_axis_split,
                                          tree_rng.substream(detail::STREAM_BUILD)));
        forest.rotations.push_back(std::move(rotation));
    }
    return forest;
}

}  // namespace

RotatedForest fit_rif(const Matrix& points, const ForestParams& params) {
    return fit_impl(points, params, haar_rotation);
}

RotatedForest detail::fit_rif_identity_rotations(const Matrix& points,
                                                 const ForestParams& params) {
    return fit_impl(points, params, identity_rotation);
}

double score_rif(const RotatedForest& forest, std::span<const double> x) {
    if (x.size() != forest.dim) throw std::invalid_argument("probe dimension mismatch");
    double total = 0.0;
    for (size_t i = 0; i < forest.trees.size(); ++i) {
        const std::vector<double> rotated = rotate_point(x, forest.rotations[i]);
        total += path_length(forest.trees[i], rotated);
    }
    return normalize_path_score(total / static_cast<double>(forest.trees.size()),
                                forest.psi_effective);
}

std::vector<double> score_batch(const RotatedForest& forest, const Matrix& points) {
    std::vector<double> out;
    out.reserve(points.rows());
    for (size_t i = 0; i < points.rows(); ++i)
        out.push_back(score_rif(forest, points.row(i)));
    return out;
}

StorageFootprint storage_footprint(const RotatedForest& forest) {
    StorageFootprint fp;
    for (const ITree& tree : forest.trees)
        for (const TreeNode& node : tree.nodes)
            if (!node.is_leaf()) ++fp.internal_nodes;
    fp.node_values = 2 * fp.internal_nodes;
    fp.rotation_values = static_cast<uint64_t>(forest.trees.size()) *
                         static_cast<uint64_t>(forest.dim) * forest.dim;
    return fp;
}

}  // namespace rif
