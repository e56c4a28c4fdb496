#include "causet/sprinkle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <utility>

#include "causet/rng.hpp"

namespace causet {

namespace {

// Stream layout for the seeded generator. Coordinates live on their own
// stream so the variable-length Poisson draw does not shift them.
constexpr std::uint64_t kCoordinateStream = 0;
constexpr std::uint64_t kCountStream = 1;

// N ~ Poisson(mean) via the exponential-sum method: count arrivals of a
// unit-rate process until the accumulated waiting time exceeds `mean`.
std::uint64_t poisson_count(const CounterRng& rng, double mean) {
    double acc = 0.0;
    std::uint64_t k = 0;
    for (std::uint64_t c = 0;; ++c) {
        acc += -std::log1p(-rng.unit(c));
        if (acc > mean) return k;
        ++k;
    }
}

}  // namespace

bool diamond_contains(double edge, const Event& e) {
    if (!(edge > 0.0)) throw std::invalid_argument("diamond edge must be positive");
    return std::abs(e.t) + std::abs(e.x) <= edge * std::numbers::sqrt2 / 2.0 + 1e-12;
}

Sprinkle sprinkle(const SprinkleConfig& config) {
    if (config.n == 0) throw std::invalid_argument("sprinkle: n must be >= 1");
    if (!(config.edge > 0.0) || !std::isfinite(config.edge)) {
        throw std::invalid_argument("sprinkle: edge length S must be positive and finite");
    }

    std::uint64_t target = config.n;
    if (config.mode == SprinkleMode::Poisson) {
        target = poisson_count(CounterRng(config.seed, kCountStream),
                               static_cast<double>(config.n));
    }

    const CounterRng rng(config.seed, kCoordinateStream);
    const double S = config.edge;

    Sprinkle result;
    result.config = config;
    result.events.reserve(target);
    std::set<std::pair<double, double>> seen;
    for (std::uint64_t draw = 0; result.events.size() < target; ++draw) {
        const double u_minus = S * (rng.unit(2 * draw) - 0.5);
        const double u_plus = S * (rng.unit(2 * draw + 1) - 0.5);
        const Event e = from_lightcone({u_minus, u_plus});
        if (!seen.insert({e.t, e.x}).second) continue;  // duplicate: redraw
        result.events.push_back(e);
    }

    std::sort(result.events.begin(), result.events.end(), event_less);
    return result;
}

const char* to_string(SprinkleMode mode) {
    return mode == SprinkleMode::FixedN ? "fixed" : "poisson";
}

SprinkleMode sprinkle_mode_from_string(const std::string& name) {
    if (name == "fixed") return SprinkleMode::FixedN;
    if (name == "poisson") return SprinkleMode::Poisson;
    throw std::invalid_argument("unknown sprinkle mode: " + name);
}

}
