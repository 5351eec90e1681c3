#include "rif/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rif/rng.hpp"

namespace rif {

double auc(const LabeledScores& ls) {
    const size_t n = ls.scores.size();
    if (ls.labels.size() != n) throw std::invalid_argument("scores/labels length mismatch");
    size_t n_pos = 0;
    for (const bool b : ls.labels) n_pos += b ? 1 : 0;
    const size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0)
        throw std::invalid_argument("AUC undefined for single-class labels");

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return ls.scores[a] < ls.scores[b]; });

    // Average ranks over tied groups (1-based ranks).
    double pos_rank_sum = 0.0;
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j < n && ls.scores[order[j]] == ls.scores[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // mean of i+1..j
        for (size_t k = i; k < j; ++k)
            if (ls.labels[order[k]]) pos_rank_sum += avg_rank;
        i = j;
    }
    const double u = pos_rank_sum - 0.5 * static_cast<double>(n_pos) * (n_pos + 1);
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

std::vector<bool> label_by_contamination(const std::vector<double>& scores,
                                         double c_prime) {
    if (c_prime < 0.0 || c_prime > 1.0)
        throw std::invalid_argument("contamination must be in [0, 1]");
    const size_t n = scores.size();
    const size_t k = std::min<size_t>(
        n, static_cast<size_t>(std::llround(c_prime * static_cast<double>(n))));

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    std::vector<bool> out(n, false);
    for (size_t i = 0; i < k; ++i) out[order[i]] = true;
    return out;
}

uint64_t repetition_seed(uint64_t master_seed, uint32_t index) {
    const Rng seeder(master_seed, /*stream_id=*/0x5eed0f5ULL);
    Rng sub = seeder.substream(index);
    return sub.next_u64();
}

EvalReport run_repetitions(const std::function<double(uint64_t seed)>& pipeline,
                           uint64_t master_seed, uint32_t k) {
    if (k < 1) throw std::invalid_argument("need at least one repetition");
    EvalReport report;
    size_t failures = 0;
    for (uint32_t i = 0; i < k; ++i) {
        const uint64_t seed = repetition_seed(master_seed, i);
        try {
            report.repetitions.push_back(pipeline(seed));
        } catch (const std::exception&) {
            ++failures;
        }
    }
    if (report.repetitions.empty())
        throw std::runtime_error("all repetitions failed");
    report.auc = std::accumulate(report.repetitions.begin(), report.repetitions.end(), 0.0) /
                 static_cast<double>(report.repetitions.size());
    report.max_auc = *std::max_element(report.repetitions.begin(), report.repetitions.end());
    return report;
}

}  // namespace rif
