#include "rif/datagen.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rif {

namespace {

using Position = std::vector<double>;
using AnomalyList = std::vector<std::pair<Position, size_t>>;

// "near (a, b)": pairs offset by +-0.01 along the first coordinate.
void append_anomalies(Matrix& points, std::vector<bool>& labels,
                      const AnomalyList& list) {
    size_t extra = 0;
    for (const auto& [pos, count] : list) extra += count;
    if (extra == 0) return;

    const size_t old_rows = points.rows();
    const size_t d = points.cols();
    Matrix grown(old_rows + extra, d);
    std::copy(points.data().begin(), points.data().end(), grown.data().begin());

    size_t r = old_rows;
    for (const auto& [pos, count] : list) {
        if (pos.size() != d) throw std::invalid_argument("anomaly position dimension mismatch");
        for (size_t i = 0; i < count; ++i, ++r) {
            auto row = grown.row(r);
            std::copy(pos.begin(), pos.end(), row.begin());
            const double step = 0.01 * static_cast<double>(i / 2 + 1);
            if (count > 1) row[0] += (i % 2 == 0) ? step : -step;
        }
    }
    points = std::move(grown);
    labels.resize(points.rows(), false);
    for (size_t i = old_rows; i < points.rows(); ++i) labels[i] = true;
}

AnomalyList preset_anomalies(const SyntheticSpec& spec) {
    AnomalyList list;
    const auto add = [&](std::initializer_list<double> pos, size_t count) {
        list.emplace_back(Position(pos), count);
    };
    switch (spec.kind) {
        case SyntheticKind::OneGaussian:
            if (spec.anomaly_preset == AnomalyPreset::Nsew) {
                add({0.5, 1.0}, 2);  // north
                add({0.5, 0.0}, 2);  // south
                add({1.0, 0.5}, 2);  // east
                add({0.0, 0.5}, 2);  // west
            } else if (spec.anomaly_preset != AnomalyPreset::None) {
                add({1.0, 1.0}, 2);
                add({1.0, 0.0}, 2);
                add({0.0, 0.0}, 2);
                add({0.0, 1.0}, 2);
            }
            break;
        case SyntheticKind::TwoGaussians:
            if (spec.anomaly_preset == AnomalyPreset::Center3) {
                add({0.5, 0.5}, 3);
            } else if (spec.anomaly_preset != AnomalyPreset::None) {
                add({0.8, 0.8}, 2);
                add({0.25, 0.25}, 2);
                add({0.5, 0.5}, 2);
            }
            break;
        case SyntheticKind::SkewedGaussians:
            if (spec.anomaly_preset != AnomalyPreset::None) {
                add({0.8, 0.7}, 1);
                add({0.82, 0.72}, 1);
                add({0.78, 0.68}, 1);
            }
            break;
        case SyntheticKind::Sinusoid:
            if (spec.anomaly_preset != AnomalyPreset::None) {
                add({5.0, 1.0}, 2);
                add({7.0, -1.0}, 2);
                add({10.0, 1.0}, 2);
                add({20.0, -1.0}, 2);
            }
            break;
        case SyntheticKind::SwissRoll:
            if (spec.anomaly_preset != AnomalyPreset::None) {
                add({-5.0, 0.0, 0.0}, 2);
                add({-2.0, 0.0, -2.0}, 2);
                add({8.0, 0.0, -2.0}, 2);
                add({-10.0, -10.0, 10.0}, 2);
            }
            break;
    }
    for (const auto& a : spec.anomalies) list.push_back(a);
    return list;
}

size_t pick_component(Rng& rng, const std::vector<double>& weights) {
    const double u = rng.uniform(0.0, 1.0);
    double acc = 0.0;
    for (size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

Matrix gaussian_mixture(Rng& rng, const SyntheticSpec& spec) {
    double wsum = 0.0;
    for (const double w : spec.weights) wsum += w;
    if (std::abs(wsum - 1.0) > 1e-9)
        throw std::invalid_argument("mixture weights must sum to 1");
    for (const double s : spec.sigmas)
        if (s <= 0.0) throw std::invalid_argument("sigma must be positive");

    const size_t d = spec.means.front().size();
    Matrix points(spec.n_normal, d);
    for (size_t i = 0; i < spec.n_normal; ++i) {
        const size_t c = pick_component(rng, spec.weights);
        auto row = points.row(i);
        for (size_t j = 0; j < d; ++j)
            row[j] = spec.means[c][j] + spec.sigmas[c] * rng.standard_normal();
    }
    return points;
}

// Stretch each cluster's offsets from its own center by `stretch` along the
// direction at angle theta.
void apply_skew(Rng& rng, Matrix& points, const SyntheticSpec& spec,
                const std::vector<size_t>& component) {
    if (spec.stretch <= 0.0) throw std::invalid_argument("stretch factor must be positive");
    const double theta = spec.theta >= 0.0
                             ? spec.theta
                             : rng.uniform(0.0, std::numbers::pi);
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    for (size_t i = 0; i < points.rows(); ++i) {
        auto row = points.row(i);
        const auto& mu = spec.means[component[i]];
        const double ox = row[0] - mu[0];
        const double oy = row[1] - mu[1];
        // Rotate into the theta frame, scale x by stretch, rotate back.
        const double ax = ct * ox + st * oy;
        const double ay = -st * ox + ct * oy;
        const double bx = spec.stretch * ax;
        row[0] = mu[0] + ct * bx - st * ay;
        row[1] = mu[1] + st * bx + ct * ay;
    }
}

Matrix sinusoid_points(Rng& rng, const SyntheticSpec& spec) {
    Matrix points(spec.n_normal, 2);
    for (size_t i = 0; i < spec.n_normal; ++i) {
        const double x = rng.uniform(0.0, spec.x_max);
        points(i, 0) = x;
        points(i, 1) = std::sin(x) + spec.noise * rng.standard_normal();
    }
    return points;
}

Matrix swiss_roll_points(Rng& rng, const SyntheticSpec& spec) {
    constexpr double U_MIN = 1.5 * std::numbers::pi;
    constexpr double U_MAX = 4.5 * std::numbers::pi;
    constexpr double HEIGHT = 30.0;
    // The height range is centered on zero and wide enough that all planted
    // anomalies (v = 0 and v = -10) sit in the interior of the roll rather
    // than on its rim.
    Matrix points(spec.n_normal, 3);
    for (size_t i = 0; i < spec.n_normal; ++i) {
        const double u = rng.uniform(U_MIN, U_MAX);
        const double v = rng.uniform(-HEIGHT / 2.0, HEIGHT / 2.0);
        points(i, 0) = u * std::cos(u) + spec.jitter * rng.standard_normal();
        points(i, 1) = v + spec.jitter * rng.standard_normal();
        points(i, 2) = u * std::sin(u) + spec.jitter * rng.standard_normal();
    }
    return points;
}

}  // namespace

SyntheticSpec default_spec(SyntheticKind kind) {
    SyntheticSpec spec;
    spec.kind = kind;
    switch (kind) {
        case SyntheticKind::OneGaussian:
            spec.means = {{0.5, 0.5}};
            spec.sigmas = {0.07};
            spec.weights = {1.0};
            break;
        case SyntheticKind::TwoGaussians:
            spec.means = {{0.8, 0.2}, {0.2, 0.8}};
            spec.sigmas = {0.06, 0.06};
            spec.weights = {0.5, 0.5};
            break;
        case SyntheticKind::SkewedGaussians:
            spec.means = {{0.2, 0.4}, {-0.2, 1.0}};
            spec.sigmas = {0.06, 0.06};
            spec.weights = {0.5, 0.5};
            break;
        case SyntheticKind::Sinusoid:
        case SyntheticKind::SwissRoll:
            break;
    }
    return spec;
}

LabeledDataset generate(Rng& rng, const SyntheticSpec& spec) {
    LabeledDataset ds;
    switch (spec.kind) {
        case SyntheticKind::OneGaussian:
        case SyntheticKind::TwoGaussians:
            ds.points = gaussian_mixture(rng, spec);
            break;
        case SyntheticKind::SkewedGaussians: {
            // Track components so the stretch is applied about each center.
            double wsum = 0.0;
            for (const double w : spec.weights) wsum += w;
            if (std::abs(wsum - 1.0) > 1e-9)
                throw std::invalid_argument("mixture weights must sum to 1");
            const size_t d = spec.means.front().size();
            ds.points = Matrix(spec.n_normal, d);
            std::vector<size_t> component(spec.n_normal);
            for (size_t i = 0; i < spec.n_normal; ++i) {
                const size_t c = pick_component(rng, spec.weights);
                component[i] = c;
                auto row = ds.points.row(i);
                for (size_t j = 0; j < d; ++j)
                    row[j] = spec.means[c][j] + spec.sigmas[c] * rng.standard_normal();
            }
            apply_skew(rng, ds.points, spec, component);
            break;
        }
        case SyntheticKind::Sinusoid:
            ds.points = sinusoid_points(rng, spec);
            break;
        case SyntheticKind::SwissRoll:
            ds.points = swiss_roll_points(rng, spec);
            break;
    }
    ds.labels.assign(ds.points.rows(), false);
    append_anomalies(ds.points, ds.labels, preset_anomalies(spec));

    size_t n_true = 0;
    for (const bool b : ds.labels) n_true += b ? 1 : 0;
    ds.contamination = ds.labels.empty()
                           ? 0.0
                           : static_cast<double>(n_true) / static_cast<double>(ds.labels.size());
    return ds;
}

SyntheticKind parse_kind(const std::string& name) {
    if (name == "one_gaussian") return SyntheticKind::OneGaussian;
    if (name == "two_gaussians") return SyntheticKind::TwoGaussians;
    if (name == "skewed_gaussians") return SyntheticKind::SkewedGaussians;
    if (name == "sinusoid") return SyntheticKind::Sinusoid;
    if (name == "swiss_roll") return SyntheticKind::SwissRoll;
    throw std::invalid_argument("unknown synthetic kind: " + name);
}

std::string kind_name(SyntheticKind kind) {
    switch (kind) {
        case SyntheticKind::OneGaussian: return "one_gaussian";
        case SyntheticKind::TwoGaussians: return "two_gaussians";
        case SyntheticKind::SkewedGaussians: return "skewed_gaussians";
        case SyntheticKind::Sinusoid: return "sinusoid";
        case SyntheticKind::SwissRoll: return "swiss_roll";
    }
    return "unknown";
}

}  // namespace rif
