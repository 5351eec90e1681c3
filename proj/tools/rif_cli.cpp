// Command-line front end for the rif library: synthetic data generation,
// model fitting/scoring, the synthetic evaluation protocol with heatmaps, and
// the real-dataset benchmark loop.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rif/datagen.hpp"
#include "rif/harness.hpp"
#include "rif/io.hpp"
#include "rif/metrics.hpp"

namespace {

struct ForestFlags {
    uint32_t trees = 100;
    uint32_t psi = 256;
    uint32_t depth_limit = 0;  // 0 = ceil(log2 psi)
    uint64_t seed = 0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--trees", trees, "Number of trees")->capture_default_str();
        cmd.add_option("--psi", psi, "Subsample size per tree")->capture_default_str();
        cmd.add_option("--depth-limit", depth_limit,
                       "Tree depth limit (0 = ceil(log2 psi))")
            ->capture_default_str();
        cmd.add_option("--seed", seed, "Master random seed")->capture_default_str();
    }

    rif::ForestParams params() const {
        return rif::ForestParams{trees, psi, depth_limit, seed};
    }
};

struct GridFlags {
    std::string grid = "30x30";
    std::vector<double> bounds = {0.0, 1.0, 0.0, 1.0};

    void attach(CLI::App& cmd) {
        cmd.add_option("--grid", grid, "Heatmap grid as ROWSxCOLS")
            ->capture_default_str();
        cmd.add_option("--bounds", bounds, "Heatmap bounds: xmin xmax ymin ymax")
            ->expected(4);
    }

    std::pair<size_t, size_t> shape() const {
        const auto sep = grid.find('x');
        size_t rows = 0, cols = 0;
        try {
            if (sep == std::string::npos) throw std::invalid_argument(grid);
            rows = std::stoul(grid.substr(0, sep));
            cols = std::stoul(grid.substr(sep + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--grid", "expected ROWSxCOLS, e.g. 30x30");
        }
        if (rows == 0 || cols == 0)
            throw CLI::ValidationError("--grid", "grid dimensions must be positive");
        return {rows, cols};
    }
};

std::vector<rif::Algo> parse_algos(const std::string& spec) {
    if (spec == "all") return {rif::Algo::IForest, rif::Algo::Eif, rif::Algo::Rif};
    std::vector<rif::Algo> algos;
    std::stringstream ss(spec);
    for (std::string tok; std::getline(ss, tok, ',');)
        algos.push_back(rif::parse_algo(tok));
    if (algos.empty()) throw std::invalid_argument("no algorithm given");
    return algos;
}

rif::AnomalyPreset parse_preset(const std::string& name) {
    if (name == "default") return rif::AnomalyPreset::Default;
    if (name == "corners") return rif::AnomalyPreset::Corners;
    if (name == "nsew") return rif::AnomalyPreset::Nsew;
    if (name == "center3") return rif::AnomalyPreset::Center3;
    if (name == "none") return rif::AnomalyPreset::None;
    throw std::invalid_argument("unknown anomaly preset: " + name);
}

rif::ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return rif::ReportFormat::Csv;
    if (name == "text") return rif::ReportFormat::Text;
    throw std::invalid_argument("unknown report format: " + name);
}

void write_scores_csv(std::ostream& out, const std::vector<double>& scores) {
    out << "index,score\n";
    char buf[64];
    for (size_t i = 0; i < scores.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", i, scores[i]);
        out << buf;
    }
}

void emit_rows(const std::string& out_path, const std::vector<rif::ReportRow>& rows,
               rif::ReportFormat format) {
    if (out_path.empty()) {
        rif::emit_report(std::cout, rows, format);
    } else {
        rif::emit_report(out_path, rows, format);
        std::cout << "wrote " << out_path << "\n";
    }
}

int run_synth(const std::string& kind, size_t n, const std::string& preset,
              uint64_t seed, const std::string& out) {
    rif::SyntheticSpec spec = rif::default_spec(rif::parse_kind(kind));
    spec.n_normal = n;
    spec.anomaly_preset = parse_preset(preset);
    rif::Rng rng(seed);
    const rif::LabeledDataset ds = rif::generate(rng, spec);
    rif::save_csv(out, ds);
    std::cout << "wrote " << out << ": " << ds.points.rows() << " rows, "
              << ds.points.cols() << " features, contamination "
              << ds.contamination << "\n";
    return 0;
}

int run_fit(const std::string& algo, const std::string& data,
            const ForestFlags& flags, const std::string& out) {
    const rif::CsvLoadResult loaded = rif::load_csv(data);
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    const rif::AnyForest forest =
        rif::fit_algo(rif::parse_algo(algo), loaded.dataset.points, flags.params());
    rif::save_model(out, forest);
    std::cout << "wrote " << out << ": " << algo << ", " << flags.trees
              << " trees, dim " << rif::forest_dim(forest) << "\n";
    return 0;
}

int run_score(const std::string& model, const std::string& data,
              double contamination, const std::string& out) {
    const rif::AnyForest forest = rif::load_model(model);
    const rif::CsvLoadResult loaded = rif::load_csv(data);
    for (const auto& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
    const std::vector<double> scores =
        rif::score_any(forest, loaded.dataset.points);

    if (out.empty()) {
        write_scores_csv(std::cout, scores);
    } else {
        std::ofstream file(out);
        if (!file) throw std::runtime_error("cannot open " + out);
        write_scores_csv(file, scores);
        std::cout << "wrote " << out << "\n";
    }

    if (loaded.dataset.contamination > 0.0) {
        const double roc =
            rif::auc({scores, loaded.dataset.labels});
        std::cout << "auc " << roc << "\n";
    }
    if (contamination >= 0.0) {
        const auto predicted = rif::label_by_contamination(scores, contamination);
        size_t flagged = 0;
        for (const bool b : predicted) flagged += b ? 1 : 0;
        std::cout << "flagged " << flagged << " of " << predicted.size()
                  << " points at contamination " << contamination << "\n";
    }
    return 0;
}

int run_eval(const std::string& kind, size_t n, const std::string& preset,
             const std::string& algos, const ForestFlags& flags,
             uint32_t repetitions, double contamination, bool standardize,
             bool pred_auc, bool with_heatmap,
             const std::string& heatmap_dir, const std::string& out,
             const std::string& format) {
    rif::ExperimentConfig config;
    config.spec = rif::default_spec(rif::parse_kind(kind));
    config.spec.n_normal = n;
    config.spec.anomaly_preset = parse_preset(preset);
    config.algorithms = parse_algos(algos);
    config.params = flags.params();
    config.repetitions = repetitions;
    config.master_seed = flags.seed;
    if (contamination >= 0.0) config.contamination_algo = contamination;
    config.standardize = standardize;
    config.auc_on_predictions = pred_auc;

    const auto results = rif::run_synthetic_experiment(config, with_heatmap);

    std::vector<rif::ReportRow> rows;
    for (const auto& [algo, result] : results) {
        rif::ReportRow row;
        row.dataset = kind;
        row.algorithm = rif::algo_name(algo);
        row.avg_auc = result.report.auc;
        row.max_auc = result.report.max_auc;
        row.contamination = result.report.contamination_data;
        rows.push_back(row);

        if (result.grid.has_value() && !heatmap_dir.empty()) {
            const std::string base =
                heatmap_dir + "/" + kind + "_" + rif::algo_name(algo);
            rif::write_heatmap_csv(base + ".csv", *result.grid);
            rif::write_heatmap_pgm(base + ".pgm", *result.grid);
            std::cout << "wrote " << base << ".csv and .pgm\n";
        }
    }
    emit_rows(out, rows, parse_format(format));
    return 0;
}

int run_heatmap(const std::string& model, const GridFlags& grid,
                const std::string& out, const std::string& pgm) {
    const rif::AnyForest forest = rif::load_model(model);
    const auto [rows, cols] = grid.shape();
    const rif::HeatmapGrid hm =
        rif::heatmap(forest, rows, cols, grid.bounds[0], grid.bounds[1],
                     grid.bounds[2], grid.bounds[3]);
    rif::write_heatmap_csv(out, hm);
    std::cout << "wrote " << out << "\n";
    if (!pgm.empty()) {
        rif::write_heatmap_pgm(pgm, hm);
        std::cout << "wrote " << pgm << "\n";
    }
    return 0;
}

int run_bench(const std::vector<std::string>& datasets, const std::string& algos,
              const ForestFlags& flags, uint32_t repetitions,
              const std::string& out, const std::string& format) {
    rif::BenchmarkConfig config;
    for (const std::string& entry : datasets) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            // Bare path: name from the file stem, matched against the manifest.
            std::string stem = entry;
            if (const auto slash = stem.find_last_of('/'); slash != std::string::npos)
                stem = stem.substr(slash + 1);
            if (const auto dot = stem.find_last_of('.'); dot != std::string::npos)
                stem = stem.substr(0, dot);
            config.datasets.emplace_back(stem, entry);
        } else {
            config.datasets.emplace_back(entry.substr(0, eq), entry.substr(eq + 1));
        }
    }
    config.algorithms = parse_algos(algos);
    config.params = flags.params();
    config.repetitions = repetitions;
    config.master_seed = flags.seed;

    const std::vector<rif::ReportRow> rows = rif::run_real_benchmark(config);
    emit_rows(out, rows, parse_format(format));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Isolation-forest family anomaly detection toolkit"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Generate a synthetic dataset CSV");
    std::string synth_kind = "one_gaussian";
    size_t synth_n = 2000;
    std::string synth_preset = "default";
    uint64_t synth_seed = 0;
    std::string synth_out;
    synth->add_option("--kind", synth_kind,
                      "one_gaussian|two_gaussians|skewed_gaussians|sinusoid|swiss_roll")
        ->capture_default_str();
    synth->add_option("--n", synth_n, "Number of normal points")->capture_default_str();
    synth->add_option("--preset", synth_preset,
                      "Anomaly preset: default|corners|nsew|center3|none")
        ->capture_default_str();
    synth->add_option("--seed", synth_seed, "Random seed")->capture_default_str();
    synth->add_option("--out", synth_out, "Output CSV path")->required();

    // fit
    auto* fit = app.add_subcommand("fit", "Fit a model and save it");
    std::string fit_algo = "rif";
    std::string fit_data;
    std::string fit_out;
    ForestFlags fit_flags;
    fit->add_option("--algo", fit_algo, "iforest|eif|rif")->capture_default_str();
    fit->add_option("--data", fit_data, "Training CSV")->required();
    fit_flags.attach(*fit);
    fit->add_option("--out", fit_out, "Output model path")->required();

    // score
    auto* score = app.add_subcommand("score", "Score a dataset with a saved model");
    std::string score_model;
    std::string score_data;
    double score_contamination = -1.0;
    std::string score_out;
    score->add_option("--model", score_model, "Model file from `fit`")->required();
    score->add_option("--data", score_data, "CSV to score")->required();
    score->add_option("--contamination", score_contamination,
                      "Also report how many points an expected anomaly "
                      "fraction would flag");
    score->add_option("--out", score_out, "Scores CSV (default: stdout)");

    // eval
    auto* eval = app.add_subcommand(
        "eval", "Run the synthetic evaluation protocol (AUC + optional heatmaps)");
    std::string eval_kind = "two_gaussians";
    size_t eval_n = 2000;
    std::string eval_preset = "default";
    std::string eval_algos = "all";
    ForestFlags eval_flags;
    uint32_t eval_reps = 1;
    double eval_contamination = -1.0;
    std::string eval_heatmap_dir;
    std::string eval_out;
    std::string eval_format = "text";
    eval->add_option("--kind", eval_kind, "Synthetic dataset kind")
        ->capture_default_str();
    eval->add_option("--n", eval_n, "Number of normal points")->capture_default_str();
    eval->add_option("--preset", eval_preset, "Anomaly preset")->capture_default_str();
    eval->add_option("--algo", eval_algos, "Comma list of iforest,eif,rif or `all`")
        ->capture_default_str();
    eval_flags.attach(*eval);
    eval->add_option("--repetitions", eval_reps, "Independent repetitions")
        ->capture_default_str();
    eval->add_option("--contamination", eval_contamination,
                     "Expected anomaly fraction for predicted labels");
    bool eval_standardize = false;
    bool eval_pred_auc = false;
    eval->add_flag("--standardize", eval_standardize,
                   "Z-score each feature before fitting");
    eval->add_flag("--pred-auc", eval_pred_auc,
                   "Report AUC of the thresholded predictions instead of the "
                   "raw scores (requires --contamination)");
    eval->add_option("--heatmap-dir", eval_heatmap_dir,
                     "Write 30x30 per-algorithm heatmap CSV/PGM files here");
    eval->add_option("--out", eval_out, "Report path (default: stdout)");
    eval->add_option("--format", eval_format, "csv|text")->capture_default_str();

    // heatmap
    auto* hm = app.add_subcommand("heatmap", "Score a lattice with a saved 2-D model");
    std::string hm_model;
    GridFlags hm_grid;
    std::string hm_out;
    std::string hm_pgm;
    hm->add_option("--model", hm_model, "Model file from `fit`")->required();
    hm_grid.attach(*hm);
    hm->add_option("--out", hm_out, "Heatmap CSV path")->required();
    hm->add_option("--pgm", hm_pgm, "Optional grayscale PGM raster path");

    // bench
    auto* bench = app.add_subcommand("bench", "Benchmark labeled CSV datasets");
    std::vector<std::string> bench_datasets;
    std::string bench_algos = "all";
    ForestFlags bench_flags;
    uint32_t bench_reps = 5;
    std::string bench_out;
    std::string bench_format = "text";
    bench->add_option("--data", bench_datasets,
                      "Dataset as name=path or a bare CSV path; repeatable")
        ->required();
    bench->add_option("--algo", bench_algos, "Comma list of iforest,eif,rif or `all`")
        ->capture_default_str();
    bench_flags.attach(*bench);
    bench->add_option("--repetitions", bench_reps, "Repetitions per dataset")
        ->capture_default_str();
    bench->add_option("--out", bench_out, "Report path (default: stdout)");
    bench->add_option("--format", bench_format, "csv|text")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*synth)
            return run_synth(synth_kind, synth_n, synth_preset, synth_seed, synth_out);
        if (*fit) return run_fit(fit_algo, fit_data, fit_flags, fit_out);
        if (*score)
            return run_score(score_model, score_data, score_contamination, score_out);
        if (*eval)
            return run_eval(eval_kind, eval_n, eval_preset, eval_algos, eval_flags,
                            eval_reps, eval_contamination, eval_standardize,
                            eval_pred_auc,
                            !eval_heatmap_dir.empty(), eval_heatmap_dir, eval_out,
                            eval_format);
        if (*hm) return run_heatmap(hm_model, hm_grid, hm_out, hm_pgm);
        if (*bench)
            return run_bench(bench_datasets, bench_algos, bench_flags, bench_reps,
                             bench_out, bench_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
