#include "rif/harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace rif {

HeatmapGrid heatmap(const PointScorer& scorer, uint32_t scorer_dim, size_t rows,
                    size_t cols, double xmin, double xmax, double ymin, double ymax) {
    if (scorer_dim != 2) throw std::invalid_argument("heatmap requires 2-D model");
    if (rows < 1 || cols < 1) throw std::invalid_argument("heatmap grid must be at least 1x1");
    HeatmapGrid grid{rows, cols, xmin, xmax, ymin, ymax, {}};
    grid.values.reserve(rows * cols);
    const double dx = (xmax - xmin) / static_cast<double>(cols);
    const double dy = (ymax - ymin) / static_cast<double>(rows);
    for (size_t i = 0; i < rows; ++i) {
        const double y = ymin + (static_cast<double>(i) + 0.5) * dy;
        for (size_t j = 0; j < cols; ++j) {
            const double x = xmin + (static_cast<double>(j) + 0.5) * dx;
            const double p[2] = {x, y};
            grid.values.push_back(scorer(std::span<const double>(p, 2)));
        }
    }
    return grid;
}

HeatmapGrid heatmap(const AnyForest& forest, size_t rows, size_t cols, double xmin,
                    double xmax, double ymin, double ymax) {
    const PointScorer scorer = [&forest](std::span<const double> x) {
        return std::visit(
            [&](const auto& f) {
                using T = std::decay_t<decltype(f)>;
                if constexpr (std::is_same_v<T, IsolationForest>) return score_iforest(f, x);
                else if constexpr (std::is_same_v<T, ExtendedForest>) return score_eif(f, x);
                else return score_rif(f, x);
            },
            forest);
    };
    return heatmap(scorer, forest_dim(forest), rows, cols, xmin, xmax, ymin, ymax);
}

void write_heatmap_csv(const std::string& path, const HeatmapGrid& grid) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << "row,col,x,y,score\n";
    const double dx = (grid.xmax - grid.xmin) / static_cast<double>(grid.cols);
    const double dy = (grid.ymax - grid.ymin) / static_cast<double>(grid.rows);
    char buf[96];
    for (size_t i = 0; i < grid.rows; ++i) {
        for (size_t j = 0; j < grid.cols; ++j) {
            const double x = grid.xmin + (static_cast<double>(j) + 0.5) * dx;
            const double y = grid.ymin + (static_cast<double>(i) + 0.5) * dy;
            std::snprintf(buf, sizeof buf, "%zu,%zu,%.10g,%.10g,%.10g\n", i, j, x, y,
                          grid.values[i * grid.cols + j]);
            out << buf;
        }
    }
}

void write_heatmap_pgm(const std::string& path, const HeatmapGrid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << "P5\n" << grid.cols << ' ' << grid.rows << "\n255\n";
    for (const double v : grid.values) {
        const double clamped = std::clamp(v, 0.0, 1.0);
        out.put(static_cast<char>(std::lround(255.0 * (1.0 - clamped))));
    }
}

Algo parse_algo(const std::string& name) {
    if (name == "iforest") return Algo::IForest;
    if (name == "eif") return Algo::Eif;
    if (name == "rif") return Algo::Rif;
    throw std::invalid_argument("unknown algorithm: " + name);
}

std::string algo_name(Algo algo) {
    switch (algo) {
        case Algo::IForest: return "iforest";
        case Algo::Eif: return "eif";
        case Algo::Rif: return "rif";
    }
    return "unknown";
}

AnyForest fit_algo(Algo algo, const Matrix& points, const ForestParams& params) {
    switch (algo) {
        case Algo::IForest: return fit_iforest(points, params);
        case Algo::Eif: return fit_eif(points, params);
        case Algo::Rif: return fit_rif(points, params);
    }
    throw std::logic_error("unreachable");
}

std::map<Algo, SyntheticResult> run_synthetic_experiment(const ExperimentConfig& config,
                                                         bool with_heatmap) {
    if (config.auc_on_predictions && !config.contamination_algo)
        throw std::invalid_argument(
            "auc_on_predictions requires contamination_algo");
    std::map<Algo, SyntheticResult> results;
    for (const Algo algo : config.algorithms) {
        SyntheticResult res;
        std::vector<double> first_scores;
        const auto pipeline = [&](uint64_t seed) {
            Rng data_rng(config.regenerate_data_per_repetition ? seed
                                                               : config.master_seed,
                         /*stream_id=*/1);
            LabeledDataset ds = generate(data_rng, config.spec);
            if (config.standardize) standardize_columns(ds.points);
            ForestParams params = config.params;
            params.seed = seed;
            const AnyForest forest = fit_algo(algo, ds.points, params);
            const std::vector<double> scores = score_any(forest, ds.points);
            if (first_scores.empty()) first_scores = scores;
            if (config.auc_on_predictions) {
                const std::vector<bool> pred =
                    label_by_contamination(scores, *config.contamination_algo);
                std::vector<double> pred01(pred.size());
                for (size_t i = 0; i < pred.size(); ++i) pred01[i] = pred[i] ? 1.0 : 0.0;
                return auc({pred01, ds.labels});
            }
            return auc({scores, ds.labels});
        };
        res.report = run_repetitions(pipeline, config.master_seed, config.repetitions);

        Rng data_rng(config.regenerate_data_per_repetition
                         ? repetition_seed(config.master_seed, 0)
                         : config.master_seed,
                     /*stream_id=*/1);
        LabeledDataset ds = generate(data_rng, config.spec);
        if (config.standardize) standardize_columns(ds.points);
        res.report.contamination_data = ds.contamination;
        if (config.contamination_algo) {
            res.report.contamination_algo = *config.contamination_algo;
            res.report.predicted =
                label_by_contamination(first_scores, *config.contamination_algo);
        }
        if (with_heatmap) {
            ForestParams params = config.params;
            params.seed = repetition_seed(config.master_seed, 0);
            const AnyForest forest = fit_algo(algo, ds.points, params);
            res.grid = heatmap(forest, 30, 30, 0.0, 1.0, 0.0, 1.0);
        }
        results.emplace(algo, std::move(res));
    }
    return results;
}

std::vector<ReportRow> run_real_benchmark(const BenchmarkConfig& config) {
    std::vector<ReportRow> rows;
    for (const auto& [name, path] : config.datasets) {
        const DatasetManifestEntry* entry = find_manifest_entry(name);
        LabeledDataset ds;
        try {
            CsvLoadResult loaded = load_csv(path, entry);
            ds = std::move(loaded.dataset);
        } catch (const std::exception& e) {
            ReportRow row;
            row.dataset = name;
            row.algorithm = "-";
            row.note = e.what();
            rows.push_back(std::move(row));
            continue;
        }
        for (const Algo algo : config.algorithms) {
            const auto pipeline = [&](uint64_t seed) {
                ForestParams params = config.params;
                params.seed = seed;
                const AnyForest forest = fit_algo(algo, ds.points, params);
                return auc({score_any(forest, ds.points), ds.labels});
            };
            ReportRow row;
            row.dataset = name;
            row.algorithm = algo_name(algo);
            row.contamination = ds.contamination;
            try {
                const EvalReport report =
                    run_repetitions(pipeline, config.master_seed, config.repetitions);
                row.avg_auc = report.auc;
                row.max_auc = report.max_auc;
            } catch (const std::exception& e) {
                row.note = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace rif
