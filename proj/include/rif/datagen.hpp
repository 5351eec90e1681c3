#pragma once

#include <string>
#include <vector>

#include "rif/matrix.hpp"
#include "rif/rng.hpp"

namespace rif {

enum class SyntheticKind {
    OneGaussian,
    TwoGaussians,
    SkewedGaussians,
    Sinusoid,
    SwissRoll,
};

// Where the planted anomalies go for the Gaussian presets.
enum class AnomalyPreset {
    Default,  // per-kind preset described below
    Corners,  // one_gaussian: 2 points at each corner of [0,1]^2
    Nsew,     // one_gaussian: 2 points at each of N/S/E/W
    Center3,  // two_gaussians: 3 points near (0.5, 0.5)
    None,
};

struct SyntheticSpec {
    SyntheticKind kind = SyntheticKind::OneGaussian;
    size_t n_normal = 2000;
    AnomalyPreset anomaly_preset = AnomalyPreset::Default;
    // Extra anomalies beyond the preset: (position, count).
    std::vector<std::pair<std::vector<double>, size_t>> anomalies;

    // Gaussian mixture parameters (one/two/skewed kinds).
    std::vector<std::vector<double>> means;
    std::vector<double> sigmas;
    std::vector<double> weights;

    // Skewed kind: stretch factor along a direction at angle theta.
    double stretch = 4.0;
    double theta = -1.0;  // < 0: drawn uniformly from [0, pi) per dataset

    // Sinusoid kind.
    double x_max = 7.0 * 3.14159265358979323846;
    double noise = 0.1;

    // Swiss roll kind.
    double jitter = 0.05;
};

struct LabeledDataset {
    Matrix points;
    std::vector<bool> labels;
    double contamination = 0.0;  // exact label fraction
};

SyntheticSpec default_spec(SyntheticKind kind);

LabeledDataset generate(Rng& rng, const SyntheticSpec& spec);

SyntheticKind parse_kind(const std::string& name);
std::string kind_name(SyntheticKind kind);

}  // namespace rif
