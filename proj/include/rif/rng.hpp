#pragma once

#include <cstdint>
#include <vector>

namespace rif {

// Deterministic splittable PRNG. A generator is identified by (seed, stream_id);
// sub-streams derived with distinct ids are independent regardless of the order
// in which they are created or consumed.
class Rng {
public:
    explicit Rng(uint64_t seed, uint64_t stream_id = 0) noexcept;

    uint64_t seed() const noexcept { return seed_; }
    uint64_t stream_id() const noexcept { return stream_id_; }

    // Derived sub-stream; depends only on (seed, stream_id, child_id).
    Rng substream(uint64_t child_id) const noexcept;

    uint64_t next_u64() noexcept;

    // Unbiased integer in [0, bound); bound must be > 0.
    uint64_t next_below(uint64_t bound) noexcept;

    // Half-open [lo, hi); returns lo when lo == hi.
    double uniform(double lo, double hi) noexcept;

    double standard_normal() noexcept;

    // Unit vector uniform on the (d-1)-sphere.
    std::vector<double> unit_sphere_vector(int d);

    // k distinct indices in [0, n), every k-subset equally likely.
    // Throws std::invalid_argument if k > n.
    std::vector<size_t> sample_without_replacement(size_t n, size_t k);

private:
    uint64_t seed_;
    uint64_t stream_id_;
    uint64_t state_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace rif
