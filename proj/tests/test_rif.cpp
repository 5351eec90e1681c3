#include "rif/rotated_forest.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "rif/datagen.hpp"
#include "rif/metrics.hpp"

using namespace rif;

namespace {

Matrix gaussian_cloud(uint64_t seed, size_t n, size_t d) {
    Rng rng(seed);
    Matrix m(n, d);
    for (auto& v : m.data()) v = rng.standard_normal();
    return m;
}

}  // namespace

TEST_CASE("fit produces one rotation per tree with valid invariants") {
    Rng data_rng(1);
    SyntheticSpec spec = default_spec(SyntheticKind::TwoGaussians);
    const LabeledDataset ds = generate(data_rng, spec);
    const RotatedForest forest = fit_rif(ds.points, ForestParams{});
    CHECK(forest.trees.size() == 100);
    CHECK(forest.rotations.size() == 100);
    for (const RotationMatrix& rot : forest.rotations) {
        CHECK(rot.dim == 2);
        CHECK(std::abs(rotation_determinant(rot) - 1.0) <= 1e-8);
    }
}

TEST_CASE("1-D rotations are all identity") {
    const Matrix data = gaussian_cloud(2, 200, 1);
    const RotatedForest forest = fit_rif(data, ForestParams{.trees = 20});
    for (const RotationMatrix& rot : forest.rotations)
        CHECK(rot.q(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit rejects fewer than two points") {
    CHECK_THROWS(fit_rif(Matrix(1, 2), ForestParams{}));
}

TEST_CASE("same seed twice gives identical scores") {
    const Matrix data = gaussian_cloud(3, 500, 3);
    ForestParams params;
    params.seed = 55;
    const RotatedForest a = fit_rif(data, params);
    const RotatedForest b = fit_rif(data, params);
    CHECK(score_batch(a, data) == score_batch(b, data));
}

TEST_CASE("identity-rotation RIF is bit-identical to iForest") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        const Matrix data = gaussian_cloud(400 + seed, 400, 4);
        ForestParams params;
        params.seed = seed;
        const RotatedForest reduced = detail::fit_rif_identity_rotations(data, params);
        const IsolationForest plain = fit_iforest(data, params);
        CHECK(score_batch(reduced, data) == score_batch(plain, data));
    }
}

TEST_CASE("scoring decomposes per tree") {
    const Matrix data = gaussian_cloud(5, 300, 2);
    ForestParams params;
    params.trees = 10;
    const RotatedForest forest = fit_rif(data, params);

    const std::vector<double> probe{0.3, -1.2};
    double total = 0.0;
    for (size_t i = 0; i < forest.trees.size(); ++i) {
        const auto rotated = rotate_point(probe, forest.rotations[i]);
        total += path_length(forest.trees[i], rotated);
    }
    const double expected =
        normalize_path_score(total / 10.0, forest.psi_effective);
    CHECK(score_rif(forest, probe) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("single identity pair equals a single-tree iForest score") {
    const Matrix data = gaussian_cloud(6, 300, 2);
    ForestParams params;
    params.trees = 1;
    params.seed = 3;
    const RotatedForest reduced = detail::fit_rif_identity_rotations(data, params);
    const IsolationForest plain = fit_iforest(data, params);
    const std::vector<double> probe{0.1, 0.2};
    CHECK(score_rif(reduced, probe) == score_iforest(plain, probe));
}

TEST_CASE("storage footprint accounting") {
    Rng data_rng(7);
    SyntheticSpec spec = default_spec(SyntheticKind::TwoGaussians);
    const LabeledDataset ds = generate(data_rng, spec);
    const RotatedForest forest = fit_rif(ds.points, ForestParams{});
    const StorageFootprint fp = storage_footprint(forest);
    CHECK(fp.rotation_values == 100 * 2 * 2);
    CHECK(fp.node_values == 2 * fp.internal_nodes);
    // d^2 per tree beats EIF's 2d per node once a tree has more than d/2 nodes.
    const uint64_t nodes_per_tree = fp.internal_nodes / 100;
    CHECK(nodes_per_tree > 2 / 2);
    CHECK(uint64_t(2 * 2) < 2 * 2 * nodes_per_tree);
}

TEST_CASE("batch and loop scores agree") {
    const Matrix data = gaussian_cloud(8, 200, 3);
    const RotatedForest forest = fit_rif(data, ForestParams{.trees = 20});
    const auto batch = score_batch(forest, data);
    for (size_t i = 0; i < data.rows(); i += 13)
        CHECK(batch[i] == score_rif(forest, data.row(i)));
}

TEST_CASE("center anomalies of the two-Gaussian dataset score high") {
    SyntheticSpec spec = default_spec(SyntheticKind::TwoGaussians);
    int hits = 0;
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Rng data_rng(700 + seed);
        const LabeledDataset ds = generate(data_rng, spec);
        ForestParams params;
        params.seed = seed;
        const RotatedForest forest = fit_rif(ds.points, params);
        const auto scores = score_batch(forest, ds.points);

        std::vector<double> normal_scores;
        std::vector<double> center_scores;
        for (size_t i = 0; i < scores.size(); ++i) {
            if (!ds.labels[i]) {
                normal_scores.push_back(scores[i]);
            } else if (std::abs(ds.points(i, 0) - 0.5) < 0.05 &&
                       std::abs(ds.points(i, 1) - 0.5) < 0.05) {
                center_scores.push_back(scores[i]);
            }
        }
        std::sort(normal_scores.begin(), normal_scores.end());
        const double p99 = normal_scores[normal_scores.size() * 99 / 100];
        if (std::all_of(center_scores.begin(), center_scores.end(),
                        [&](double s) { return s > p99; }))
            ++hits;
    }
    CHECK(hits >= 9);
}
