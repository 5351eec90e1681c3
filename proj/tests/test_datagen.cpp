#include "rif/datagen.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_util.hpp"

using namespace rif;

namespace {

size_t count_true(const std::vector<bool>& labels) {
    size_t n = 0;
    for (const bool b : labels) n += b ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("one gaussian corner preset: 8 anomalies, contamination 8/2008") {
    Rng rng(1);
    const LabeledDataset ds = generate(rng, default_spec(SyntheticKind::OneGaussian));
    CHECK(ds.points.rows() == 2008);
    CHECK(count_true(ds.labels) == 8);
    CHECK(ds.contamination == doctest::Approx(8.0 / 2008.0).epsilon(1e-12));
}

TEST_CASE("no anomalies means zero contamination") {
    Rng rng(2);
    SyntheticSpec spec = default_spec(SyntheticKind::OneGaussian);
    spec.anomaly_preset = AnomalyPreset::None;
    const LabeledDataset ds = generate(rng, spec);
    CHECK(ds.contamination == 0.0);
    CHECK(count_true(ds.labels) == 0);
}

TEST_CASE("one gaussian sample mean is near (0.5, 0.5)") {
    Rng rng(3);
    SyntheticSpec spec = default_spec(SyntheticKind::OneGaussian);
    spec.anomaly_preset = AnomalyPreset::None;
    const LabeledDataset ds = generate(rng, spec);
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < ds.points.rows(); ++i) {
        mx += ds.points(i, 0);
        my += ds.points(i, 1);
    }
    mx /= static_cast<double>(ds.points.rows());
    my /= static_cast<double>(ds.points.rows());
    CHECK(std::abs(mx - 0.5) < 0.01);
    CHECK(std::abs(my - 0.5) < 0.01);
}

TEST_CASE("normals stay within mu +- 6 sigma") {
    Rng rng(4);
    SyntheticSpec spec = default_spec(SyntheticKind::OneGaussian);
    spec.anomaly_preset = AnomalyPreset::None;
    spec.n_normal = 20000;
    const LabeledDataset ds = generate(rng, spec);
    size_t inside = 0;
    for (size_t i = 0; i < ds.points.rows(); ++i) {
        if (std::abs(ds.points(i, 0) - 0.5) <= 6 * 0.07 &&
            std::abs(ds.points(i, 1) - 0.5) <= 6 * 0.07)
            ++inside;
    }
    CHECK(static_cast<double>(inside) / ds.points.rows() >= 0.9999);
}

TEST_CASE("two gaussians: contamination and component balance") {
    Rng rng(5);
    const LabeledDataset ds = generate(rng, default_spec(SyntheticKind::TwoGaussians));
    CHECK(ds.points.rows() == 2006);
    CHECK(count_true(ds.labels) == 6);
    CHECK(ds.contamination == doctest::Approx(6.0 / 2006.0).epsilon(1e-12));

    // Points nearer (0.8, 0.2) vs (0.2, 0.8) should split roughly evenly.
    size_t first = 0;
    for (size_t i = 0; i < 2000; ++i) {
        const double d1 = std::hypot(ds.points(i, 0) - 0.8, ds.points(i, 1) - 0.2);
        const double d2 = std::hypot(ds.points(i, 0) - 0.2, ds.points(i, 1) - 0.8);
        if (d1 < d2) ++first;
    }
    CHECK(std::abs(static_cast<double>(first) - 1000.0) < 70.0);
}

TEST_CASE("degenerate mixture weight gives a single cluster") {
    Rng rng(6);
    SyntheticSpec spec = default_spec(SyntheticKind::TwoGaussians);
    spec.weights = {1.0, 0.0};
    spec.anomaly_preset = AnomalyPreset::None;
    const LabeledDataset ds = generate(rng, spec);
    for (size_t i = 0; i < ds.points.rows(); ++i) {
        CHECK(std::abs(ds.points(i, 0) - 0.8) < 6 * 0.06);
        CHECK(std::abs(ds.points(i, 1) - 0.2) < 6 * 0.06);
    }
}

TEST_CASE("skewed gaussians: contamination and stretch direction") {
    Rng rng(7);
    SyntheticSpec spec = default_spec(SyntheticKind::SkewedGaussians);
    const LabeledDataset ds = generate(rng, spec);
    CHECK(ds.points.rows() == 2003);
    CHECK(ds.contamination == doctest::Approx(3.0 / 2003.0).epsilon(1e-12));
    CHECK_THROWS(([&] {
        Rng r2(8);
        SyntheticSpec bad = spec;
        bad.stretch = 0.0;
        generate(r2, bad);
    })());
}

TEST_CASE("stretch factor 1 is a no-op distributionally") {
    SyntheticSpec spec = default_spec(SyntheticKind::SkewedGaussians);
    spec.stretch = 1.0;
    spec.anomaly_preset = AnomalyPreset::None;
    spec.weights = {1.0, 0.0};
    Rng rng(9);
    const LabeledDataset ds = generate(rng, spec);
    // Isotropic cluster: sample variances along both axes match sigma^2.
    double vx = 0.0, vy = 0.0;
    for (size_t i = 0; i < ds.points.rows(); ++i) {
        vx += std::pow(ds.points(i, 0) - 0.2, 2);
        vy += std::pow(ds.points(i, 1) - 0.4, 2);
    }
    vx /= static_cast<double>(ds.points.rows());
    vy /= static_cast<double>(ds.points.rows());
    CHECK(vx == doctest::Approx(0.06 * 0.06).epsilon(0.15));
    CHECK(vy == doctest::Approx(0.06 * 0.06).epsilon(0.15));
}

TEST_CASE("stretched cluster principal axis aligns with theta") {
    SyntheticSpec spec = default_spec(SyntheticKind::SkewedGaussians);
    spec.theta = 0.4;
    spec.anomaly_preset = AnomalyPreset::None;
    spec.weights = {1.0, 0.0};
    spec.n_normal = 5000;
    Rng rng(10);
    const LabeledDataset ds = generate(rng, spec);

    // 2x2 covariance eigenvector via the analytic formula.
    double cxx = 0.0, cxy = 0.0, cyy = 0.0;
    for (size_t i = 0; i < ds.points.rows(); ++i) {
        const double dx = ds.points(i, 0) - 0.2;
        const double dy = ds.points(i, 1) - 0.4;
        cxx += dx * dx;
        cxy += dx * dy;
        cyy += dy * dy;
    }
    const double angle = 0.5 * std::atan2(2.0 * cxy, cxx - cyy);
    const double deg = std::abs(angle - 0.4) * 180.0 / std::numbers::pi;
    CHECK(deg < 5.0);
}

TEST_CASE("sinusoid: anomalies and noise scale") {
    Rng rng(11);
    SyntheticSpec spec = default_spec(SyntheticKind::Sinusoid);
    const LabeledDataset ds = generate(rng, spec);
    CHECK(count_true(ds.labels) == 8);

    double mean_abs_dev = 0.0;
    for (size_t i = 0; i < 2000; ++i)
        mean_abs_dev += std::abs(ds.points(i, 1) - std::sin(ds.points(i, 0)));
    mean_abs_dev /= 2000.0;
    const double expected = 0.1 * std::sqrt(2.0 / std::numbers::pi);
    CHECK(mean_abs_dev == doctest::Approx(expected).epsilon(0.10));
}

TEST_CASE("sinusoid with zero noise lies on the curve") {
    Rng rng(12);
    SyntheticSpec spec = default_spec(SyntheticKind::Sinusoid);
    spec.noise = 0.0;
    spec.anomaly_preset = AnomalyPreset::None;
    const LabeledDataset ds = generate(rng, spec);
    for (size_t i = 0; i < ds.points.rows(); ++i)
        CHECK(ds.points(i, 1) == std::sin(ds.points(i, 0)));
}

TEST_CASE("swiss roll: labels, surface, and intrinsic dimension") {
    Rng rng(13);
    SyntheticSpec spec = default_spec(SyntheticKind::SwissRoll);
    const LabeledDataset ds = generate(rng, spec);
    CHECK(ds.points.rows() == 2008);
    CHECK(count_true(ds.labels) == 8);

    SyntheticSpec flat = spec;
    flat.jitter = 0.0;
    flat.anomaly_preset = AnomalyPreset::None;
    Rng rng2(14);
    const LabeledDataset exact = generate(rng2, flat);
    for (size_t i = 0; i < exact.points.rows(); i += 37) {
        const double x = exact.points(i, 0);
        const double z = exact.points(i, 2);
        const double u = std::hypot(x, z);
        CHECK(x == doctest::Approx(u * std::cos(u)).epsilon(1e-9));
        CHECK(z == doctest::Approx(u * std::sin(u)).epsilon(1e-9));
    }
}

TEST_CASE("generation is deterministic under a fixed seed") {
    for (const SyntheticKind kind :
         {SyntheticKind::OneGaussian, SyntheticKind::TwoGaussians,
          SyntheticKind::SkewedGaussians, SyntheticKind::Sinusoid,
          SyntheticKind::SwissRoll}) {
        Rng a(21), b(21);
        const LabeledDataset da = generate(a, default_spec(kind));
        const LabeledDataset db = generate(b, default_spec(kind));
        CHECK(da.points == db.points);
        CHECK(da.labels == db.labels);
    }
}

TEST_CASE("kind names round-trip") {
    for (const SyntheticKind kind :
         {SyntheticKind::OneGaussian, SyntheticKind::TwoGaussians,
          SyntheticKind::SkewedGaussians, SyntheticKind::Sinusoid,
          SyntheticKind::SwissRoll}) {
        CHECK(parse_kind(kind_name(kind)) == kind);
    }
    CHECK_THROWS(parse_kind("nope"));
}
