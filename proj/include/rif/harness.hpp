#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "rif/io.hpp"
#include "rif/metrics.hpp"

namespace rif {

struct HeatmapGrid {
    size_t rows = 0;
    size_t cols = 0;
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    std::vector<double> values;  // row-major, all in [0, 1]
};

using PointScorer = std::function<double(std::span<const double>)>;

// Scores the cell-center lattice of the bounds with a 2-D scorer.
HeatmapGrid heatmap(const PointScorer& scorer, uint32_t scorer_dim, size_t rows,
                    size_t cols, double xmin, double xmax, double ymin, double ymax);

HeatmapGrid heatmap(const AnyForest& forest, size_t rows, size_t cols, double xmin,
                    double xmax, double ymin, double ymax);

// CSV columns: row, col, x, y, score.
void write_heatmap_csv(const std::string& path, const HeatmapGrid& grid);

// 8-bit grayscale PGM; score 0 maps to white, 1 to black.
void write_heatmap_pgm(const std::string& path, const HeatmapGrid& grid);

enum class Algo { IForest, Eif, Rif };

Algo parse_algo(const std::string& name);
std::string algo_name(Algo algo);

AnyForest fit_algo(Algo algo, const Matrix& points, const ForestParams& params);

struct ExperimentConfig {
    SyntheticSpec spec;
    std::vector<Algo> algorithms = {Algo::IForest, Algo::Eif, Algo::Rif};
    ForestParams params;
    uint32_t repetitions = 1;
    uint64_t master_seed = 0;
    bool regenerate_data_per_repetition = true;
    std::optional<double> contamination_algo;
    // Z-score each feature before fitting; used for datasets whose axes have
    // very different scales (skewed, sinusoid, swiss roll).
    bool standardize = false;
    // When set (requires contamination_algo), the per-repetition AUC is
    // computed on the binary predictions instead of the raw scores: scores are
    // thresholded at the contamination cutoff and the 0/1 vector is ranked
    // against the labels, giving (TPR + 1 - FPR) / 2. This measures what a
    // deployed detector flags at the operating point rather than the full
    // ranking quality.
    bool auc_on_predictions = false;
};

struct SyntheticResult {
    EvalReport report;
    std::optional<HeatmapGrid> grid;
};

// Generates the data, fits each algorithm over the configured repetitions, and
// computes AUC against the planted labels.
std::map<Algo, SyntheticResult> run_synthetic_experiment(
    const ExperimentConfig& config, bool with_heatmap = false);

struct BenchmarkConfig {
    // (dataset name, csv path); names are matched against the built-in manifest.
    std::vector<std::pair<std::string, std::string>> datasets;
    std::vector<Algo> algorithms = {Algo::IForest, Algo::Eif, Algo::Rif};
    ForestParams params;
    uint32_t repetitions = 5;
    uint64_t master_seed = 0;
};

// One Table-2-shaped row per dataset x algorithm; missing or broken files are
// recorded as note rows and the run continues.
std::vector<ReportRow> run_real_benchmark(const BenchmarkConfig& config);

}  // namespace rif
