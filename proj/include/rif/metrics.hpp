#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace rif {

struct LabeledScores {
    std::vector<double> scores;
    std::vector<bool> labels;  // true = anomaly
};

// Mann-Whitney AUC via rank sums, ties get 0.5 credit. O(n log n).
// Throws std::invalid_argument unless both classes are present.
double auc(const LabeledScores& ls);

// Marks exactly round(c_prime * n) entries true, by descending score; ties at
// the cutoff broken by ascending original index. round is half-away-from-zero.
std::vector<bool> label_by_contamination(const std::vector<double>& scores,
                                         double c_prime);

struct EvalReport {
    double auc = 0.0;  // average over repetitions
    double max_auc = 0.0;
    double contamination_data = 0.0;
    double contamination_algo = 0.0;
    std::vector<bool> predicted;  // from the first repetition
    std::vector<double> repetitions;
};

// Runs the pipeline k times with derived seeds (master_seed + index
// sub-streams) and collects per-run AUC. The pipeline returns the AUC for a
// given seed. Individual failures are skipped; throws only if every run fails.
EvalReport run_repetitions(const std::function<double(uint64_t seed)>& pipeline,
                           uint64_t master_seed, uint32_t k);

// The seed run_repetitions hands to repetition `index`.
uint64_t repetition_seed(uint64_t master_seed, uint32_t index);

}  // namespace rif
