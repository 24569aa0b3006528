#pragma once

#include <cstdint>
#include <optional>

#include "brs/solver.hpp"

namespace brs {

struct GeneratorConfig {
    int barrier_length = 16;
    int depots = 3;
    std::optional<int> max_drones;  // copied into the instance when set
    double min_altitude = 0.4;      // lowest depot height
    double max_altitude_frac = 0.25;  // highest depot height, as a fraction of L
    int max_attempts = 64;
};

// Deterministic random instance that passes the feasibility screen and has a
// partition chain on the integer grid. Every depot is individually useful
// (non-empty reach span); heights are resampled until that holds. Throws
// std::runtime_error when max_attempts retries cannot produce one.
Instance generate_instance(std::uint64_t seed, const GeneratorConfig& config);

}  // namespace brs
