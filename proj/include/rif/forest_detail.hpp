#pragma once

#include <cstdint>

#include "rif/matrix.hpp"
#include "rif/rng.hpp"

namespace rif::detail {

// Per-tree sub-stream labels. Shared by all three fitters so that matched
// sub-streams draw identical subsamples and splits.
inline constexpr uint64_t STREAM_ROTATION = 0;
inline constexpr uint64_t STREAM_SAMPLE = 1;
inline constexpr uint64_t STREAM_BUILD = 2;

// min(psi, n) rows drawn without replacement.
Matrix subsample(const Matrix& points, uint32_t psi, Rng& rng);

}  // namespace rif::detail
