#include "rif/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_set>

namespace rif {

namespace {

// SplitMix64 finalizer (Steele, Lea, Flood 2014). Also used as the mixing
// function for sub-stream derivation.
constexpr uint64_t mix64(uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr uint64_t GOLDEN = 0x9e3779b97f4a7c15ULL;

constexpr uint64_t derive_state(uint64_t seed, uint64_t stream_id) noexcept {
    uint64_t h = mix64(seed + GOLDEN);
    h = mix64(h ^ (stream_id + GOLDEN));
    return h;
}

}  // namespace

Rng::Rng(uint64_t seed, uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id), state_(derive_state(seed, stream_id)) {}

Rng Rng::substream(uint64_t child_id) const noexcept {
    // Children are labeled by hashing the parent's stream id with the child id,
    // so nested derivations do not collide with siblings.
    return Rng(seed_, mix64(stream_id_ * GOLDEN + 1) ^ (child_id + GOLDEN));
}

uint64_t Rng::next_u64() noexcept {
    state_ += GOLDEN;
    return mix64(state_);
}

uint64_t Rng::next_below(uint64_t bound) noexcept {
    // Rejection sampling to avoid modulo bias.
    const uint64_t threshold = -bound % bound;
    for (;;) {
        const uint64_t r = next_u64();
        if (r >= threshold) return r % bound;
    }
}

double Rng::uniform(double lo, double hi) noexcept {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

double Rng::standard_normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    // Box-Muller; u1 must stay away from 0.
    double u1;
    do {
        u1 = uniform(0.0, 1.0);
    } while (u1 <= 0.0);
    const double u2 = uniform(0.0, 1.0);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::vector<double> Rng::unit_sphere_vector(int d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
    std::vector<double> v(static_cast<size_t>(d));
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (auto& x : v) {
            x = standard_normal();
            norm2 += x * x;
        }
    } while (norm2 == 0.0);
    // Division (not multiplication by a rounded reciprocal) keeps the d=1
    // case exactly +-1.
    const double norm = std::sqrt(norm2);
    for (auto& x : v) x /= norm;
    return v;
}

std::vector<size_t> Rng::sample_without_replacement(size_t n, size_t k) {
    if (k > n) throw std::invalid_argument("sample size exceeds population");
    // Floyd's algorithm: uniform over k-subsets with O(k) memory.
    std::unordered_set<size_t> chosen;
    chosen.reserve(k * 2);
    std::vector<size_t> out;
    out.reserve(k);
    for (size_t j = n - k; j < n; ++j) {
        const size_t t = static_cast<size_t>(next_below(j + 1));
        if (chosen.insert(t).second) {
            out.push_back(t);
        } else {
            chosen.insert(j);
            out.push_back(j);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rif
