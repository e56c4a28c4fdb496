#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "causet/geometry.hpp"

namespace causet {

enum class SprinkleMode {
    FixedN,   ///< exactly n points
    Poisson,  ///< N ~ Poisson(n) points
};

struct SprinkleConfig {
    std::uint64_t n = 1000;              ///< point count (FixedN) or mean (Poisson)
    double edge = 1.0;                   ///< edge length S of the lightcone square
    std::uint64_t seed = 0;
    SprinkleMode mode = SprinkleMode::FixedN;
};

/// Events sprinkled into a causal diamond, sorted by (t, x).
struct Sprinkle {
    SprinkleConfig config;
    std::vector<Event> events;
};

/// True iff e lies inside the diamond of lightcone edge S:
/// |t| + |x| <= S*sqrt(2)/2 + 1e-12.
bool diamond_contains(double edge, const Event& e);

/// Draws (u_minus, u_plus) uniformly in [-S/2, S/2]^2 and rotates into (t, x).
/// Deterministic: identical config gives a bit-identical event list.
/// Exact duplicate draws are rejected and redrawn.
/// Throws std::invalid_argument for n = 0 or S <= 0.
Sprinkle sprinkle(const SprinkleConfig& config);

const char* to_string(SprinkleMode mode);
SprinkleMode sprinkle_mode_from_string(const std::string& name);

}
